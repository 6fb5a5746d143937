#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taglinegen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidProfile : public Error {
 public:
  InvalidProfile(std::string field, const std::string& detail)
      : Error("invalid profile: " + field + ": " + detail), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error("parse error at line " + std::to_string(line) + ": " + detail), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateUser : public Error {
 public:
  explicit DuplicateUser(std::string user_id)
      : Error("duplicate user_id: " + user_id), user_id_(std::move(user_id)) {}
  const std::string& user_id() const { return user_id_; }

 private:
  std::string user_id_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyLexicon : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class MalformedUrl : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class UnknownTerm : public Error {
 public:
  explicit UnknownTerm(std::string term)
      : Error("term not present in corpus stats: " + term), term_(std::move(term)) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

class NoCandidates : public Error {
 public:
  using Error::Error;
};

class UnequalRaterCounts : public Error {
 public:
  using Error::Error;
};

}  // namespace taglinegen
