#include <doctest.h>

#include <random>

#include "taglinegen/errors.hpp"
#include "taglinegen/link_triangulation.hpp"
#include "taglinegen/occupation.hpp"

using namespace taglinegen;

namespace {

KbPage page(std::string title, std::vector<std::string> links) {
  KbPage p;
  p.title = std::move(title);
  p.external_links = std::move(links);
  return p;
}

UserProfile profile_with_url(const std::string& url) {
  UserProfile p;
  p.user_id = "u1";
  p.personal_url = url;
  return p;
}

}  // namespace

TEST_CASE("normalize_url strips scheme, www, and trailing slash") {
  CHECK(normalize_url("http://www.rachaelray.com/") == "rachaelray.com");
  CHECK(normalize_url("https://RachaelRay.com") == "rachaelray.com");
  CHECK(normalize_url("http://example.com/About/") == "example.com/About");
  CHECK(normalize_url("http://example.com/a#section") == "example.com/a");
  CHECK(normalize_url("example.com:8080/x") == "example.com:8080/x");
}

TEST_CASE("normalize_url rejects non-URLs") {
  CHECK_THROWS_AS(normalize_url("not a url"), MalformedUrl);
  CHECK_THROWS_AS(normalize_url(""), MalformedUrl);
  CHECK_THROWS_AS(normalize_url("http://"), MalformedUrl);
  CHECK_THROWS_AS(normalize_url("localhost"), MalformedUrl);
}

TEST_CASE("normalize_url is idempotent") {
  std::vector<std::string> urls = {
      "http://www.rachaelray.com/",  "https://Example.COM/Path/To/Page?Q=1",
      "www.www.deep.example.org/x/", "HTTP://WWW.COM",
      "http://t.co/AbC",             "site.io/blog#frag",
  };
  for (const std::string& url : urls) {
    std::string once = normalize_url(url);
    CHECK(normalize_url(once) == once);
  }
}

TEST_CASE("build_link_index maps normalized links to pages") {
  std::vector<KbPage> pages;
  pages.push_back(page("A", {"http://www.a.com", "https://blog.a.com/"}));
  LinkIndex index = build_link_index(std::move(pages));
  CHECK(index.key_count() == 2);
  REQUIRE(index.find("a.com") != nullptr);
  CHECK(index.find("a.com")->size() == 1);
  REQUIRE(index.find("blog.a.com") != nullptr);
  CHECK(index.find("nothing.com") == nullptr);
}

TEST_CASE("build_link_index keeps every page sharing a link") {
  std::vector<KbPage> pages;
  pages.push_back(page("A", {"http://shared.com"}));
  pages.push_back(page("B", {"https://www.shared.com/"}));
  LinkIndex index = build_link_index(std::move(pages));
  REQUIRE(index.find("shared.com") != nullptr);
  CHECK(index.find("shared.com")->size() == 2);
}

TEST_CASE("build_link_index skips and counts malformed links") {
  std::vector<KbPage> pages;
  pages.push_back(page("A", {"not a url", "::", "http://ok.com"}));
  pages.push_back(page("B", {"also bad"}));
  LinkIndex index = build_link_index(std::move(pages));
  CHECK(index.key_count() == 1);
  CHECK(index.skipped_links() == 3);
}

TEST_CASE("resolve_identity closes the link triangle") {
  std::vector<KbPage> pages;
  pages.push_back(page("Rachael Ray", {"http://www.rachaelray.com"}));
  LinkIndex index = build_link_index(std::move(pages));
  Resolution res = resolve_identity(profile_with_url("http://www.rachaelray.com"), index);
  REQUIRE(res.page != nullptr);
  CHECK(res.page->title == "Rachael Ray");
  CHECK_FALSE(res.ambiguous);
}

TEST_CASE("resolve_identity without a personal url is none") {
  LinkIndex index = build_link_index({page("A", {"http://a.com"})});
  UserProfile p;
  p.user_id = "u1";
  Resolution res = resolve_identity(p, index);
  CHECK(res.page == nullptr);
  CHECK_FALSE(res.ambiguous);
}

TEST_CASE("resolve_identity reports ambiguity and returns none") {
  std::vector<KbPage> pages;
  pages.push_back(page("A", {"http://shared.com"}));
  pages.push_back(page("B", {"http://shared.com"}));
  LinkIndex index = build_link_index(std::move(pages));
  Resolution res = resolve_identity(profile_with_url("shared.com"), index);
  CHECK(res.page == nullptr);
  CHECK(res.ambiguous);
  CHECK(res.match_count == 2);
}

TEST_CASE("resolved pages always list the user's canonical url") {
  std::mt19937 rng(7);
  std::vector<KbPage> pages;
  for (int i = 0; i < 50; ++i) {
    pages.push_back(page("P" + std::to_string(i),
                         {"http://site" + std::to_string(rng() % 30) + ".com/page"}));
  }
  LinkIndex index = build_link_index(std::move(pages));
  for (int i = 0; i < 30; ++i) {
    std::string url = "http://site" + std::to_string(i) + ".com/page";
    Resolution res = resolve_identity(profile_with_url(url), index);
    if (res.page == nullptr) continue;
    bool listed = false;
    for (const std::string& link : res.page->external_links) {
      if (normalize_url(link) == normalize_url(url)) listed = true;
    }
    CHECK(listed);
  }
}

TEST_CASE("parse_infobox_occupation splits plain comma lists") {
  auto tags = parse_infobox_occupation("Actor, comedian, director, screenwriter");
  REQUIRE(tags.size() == 4);
  CHECK(tags[0] == "Actor");
  CHECK(tags[1] == "comedian");
  CHECK(tags[2] == "director");
  CHECK(tags[3] == "screenwriter");
}

TEST_CASE("parse_infobox_occupation strips wiki links and splits on and") {
  auto tags = parse_infobox_occupation("[[Television personality]] and [[author]]");
  REQUIRE(tags.size() == 2);
  CHECK(tags[0] == "Television personality");
  CHECK(tags[1] == "author");
}

TEST_CASE("parse_infobox_occupation handles piped links, templates, and markup") {
  CHECK(parse_infobox_occupation("[[Chef (title)|Chef]]") ==
        std::vector<std::string>{"Chef"});
  CHECK(parse_infobox_occupation("{{hlist|Actor|comedian}}") ==
        std::vector<std::string>{"Actor", "comedian"});
  CHECK(parse_infobox_occupation("'''Singer''' <br/> ''dancer''") ==
        std::vector<std::string>{"Singer", "dancer"});
  CHECK(parse_infobox_occupation("* Producer\n* Writer") ==
        std::vector<std::string>{"Producer", "Writer"});
  CHECK(parse_infobox_occupation("").empty());
}

TEST_CASE("extract_first_sentence_occupation takes the phrase after is") {
  auto tags = extract_first_sentence_occupation(
      "Rachael Domenica Ray is an American television personality and author.");
  REQUIRE(tags.size() == 2);
  CHECK(tags[0] == "American television personality");
  CHECK(tags[1] == "author");
}

TEST_CASE("extract_first_sentence_occupation needs the copula") {
  CHECK(extract_first_sentence_occupation("No copula here.").empty());
  CHECK(extract_first_sentence_occupation("X is a chef.") == std::vector<std::string>{"chef"});
  CHECK(extract_first_sentence_occupation("Y is the head chef at Z.") ==
        std::vector<std::string>{"head chef at Z"});
}

TEST_CASE("generate_kb_candidates composes infobox tags under the budget") {
  std::vector<KbPage> pages;
  KbPage p = page("Star", {"http://star.example.com"});
  p.infobox_occupation = "Actor, comedian, director, screenwriter";
  pages.push_back(p);
  LinkIndex index = build_link_index(std::move(pages));
  auto candidates =
      generate_kb_candidates(profile_with_url("http://star.example.com"), index, 70);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].text == "Actor, comedian, director, screenwriter");
  CHECK(candidates[0].method == Method::link_triangulation);
  CHECK(candidates[0].char_length == 39);
}

TEST_CASE("generate_kb_candidates is empty for unresolved users or bare pages") {
  LinkIndex index = build_link_index({page("A", {"http://a.com"})});
  CHECK(generate_kb_candidates(profile_with_url("http://nowhere.com"), index, 70).empty());
  CHECK(generate_kb_candidates(profile_with_url("http://a.com"), index, 70).empty());
}

TEST_CASE("infobox wins over the first sentence when both exist") {
  std::vector<KbPage> pages;
  KbPage p = page("A", {"http://a.com"});
  p.infobox_occupation = "Chef";
  p.first_sentence = "A is a famous painter.";
  pages.push_back(p);
  KbPage q = page("B", {"http://b.com"});
  q.first_sentence = "B is a famous painter.";
  pages.push_back(q);
  LinkIndex index = build_link_index(std::move(pages));

  auto from_infobox = generate_kb_candidates(profile_with_url("http://a.com"), index, 70);
  REQUIRE(from_infobox.size() == 1);
  CHECK(from_infobox[0].text == "Chef");

  auto from_sentence = generate_kb_candidates(profile_with_url("http://b.com"), index, 70);
  REQUIRE(from_sentence.size() == 1);
  CHECK(from_sentence[0].text == "famous painter");
}

TEST_CASE("kb tags route through the same window rule as bio fragments") {
  // Joined lengths: [0,1]=15, [1,2]=18, [2,3]=22 (too long), [3,3]=12.
  std::vector<std::string> tags = {"Actor", "comedian", "director", "screenwriter"};
  CHECK(maximal_windows(tags, 20) ==
        std::vector<std::string>{"Actor, comedian", "comedian, director", "screenwriter"});
}
