"""Smoke tests for the python module and the CLI binary."""

import json
import os
import subprocess
import sys
import tempfile

import taglinegen as tg

WORKED_BIO = (
    "Tech journalist for All Things D. Oregonian transplanted to New York. "
    "Former BusinessWeek writer and columnist. Columbia grad."
)


def check(condition, message):
    if not condition:
        raise AssertionError(message)


def test_worked_example():
    lex = tg.OccupationLexicon(["journalist", "writer", "columnist"])
    profile = tg.UserProfile(user_id="u1", bio=WORKED_BIO)
    candidates = tg.generate_occupation_candidates(profile, lex, 70)
    texts = [c.text for c in candidates]
    check(
        texts
        == [
            "Tech journalist for All Things D, Former BusinessWeek writer",
            "Former BusinessWeek writer, columnist",
        ],
        f"unexpected candidates: {texts}",
    )
    check(all(c.char_length <= 70 for c in candidates), "candidate over budget")


def test_preprocess_and_windows():
    check(tg.preprocess_bio("writer...\nblogger") == "writer. blogger", "preprocess")
    check(tg.normalize_url("http://www.RachaelRay.com/") == "rachaelray.com", "normalize_url")
    check(
        tg.maximal_windows(["x" * 80, "editor"], 70) == ["editor"],
        "oversized fragment handling",
    )
    tags = tg.parse_infobox_occupation("[[Television personality]] and [[author]]")
    check(tags == ["Television personality", "author"], f"infobox tags: {tags}")


def test_scoring():
    check(abs(tg.flesch_score("Writer.") - 36.62) < 0.01, "flesch hand value")
    check(tg.flesch_score("") == 0.0, "flesch empty")
    check(abs(tg.normalize_metric(9, 99) - 0.5) < 1e-12, "normalize_metric midpoint")
    check(abs(tg.fleiss_kappa([[0, 0, 1], [1, 1, 1]], 2) - 0.25) < 1e-9, "fleiss kappa")
    check(abs(tg.majority_good_pct([[1, 1, 0], [0, 0, 2], [2, 1, 0]]) - 66.67) < 0.01,
          "majority pct")


def test_selection_roundtrip():
    docs = [
        ("u1", "tech journalist"),
        ("u2", "food blogger"),
        ("u3", "tech blogger"),
    ]
    profiles = [tg.UserProfile(user_id=u, bio=b) for u, b in docs]
    lex = tg.OccupationLexicon(["journalist", "blogger"])
    candidates = []
    for p in profiles:
        candidates.extend(tg.generate_occupation_candidates(p, lex, 70))
    stats = tg.build_term_stats(candidates)
    pool = [c for c in candidates if c.user_id == "u1"]
    tagline = tg.select_final(pool, stats, 70, None)
    check(tagline.text == "tech journalist", f"selected {tagline.text}")
    check(abs(tagline.score - 0.16115) < 1e-4, f"score {tagline.score}")


def test_error_mapping():
    try:
        tg.normalize_url("not a url")
    except tg.TaglineError:
        pass
    else:
        raise AssertionError("expected TaglineError for a malformed URL")


def test_cli_end_to_end():
    cli = os.environ.get("TAGLINEGEN_CLI")
    if not cli:
        print("  (TAGLINEGEN_CLI unset; skipping CLI checks)")
        return
    with tempfile.TemporaryDirectory(prefix="taglinegen_smoke_") as tmp:
        profiles = os.path.join(tmp, "profiles.jsonl")
        lexicon = os.path.join(tmp, "lexicon.txt")
        kb = os.path.join(tmp, "kb.jsonl")
        out = os.path.join(tmp, "taglines.jsonl")
        with open(profiles, "w", encoding="utf-8") as fh:
            for i in range(5):
                fh.write(
                    json.dumps(
                        {
                            "user_id": f"u{i}",
                            "screen_name": f"name{i}",
                            "bio": "Senior writer and editor." if i % 2 == 0 else "",
                            "tweets_count": i,
                            "mentions_count": 2 * i,
                            "retweeted_count": i % 3,
                            "expert_score": float(10 - i),
                        }
                    )
                    + "\n"
                )
        with open(lexicon, "w", encoding="utf-8") as fh:
            fh.write("writer\neditor\n")
        with open(kb, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"title": "X", "external_links": ["http://x.example.com"]}) + "\n")

        ok = subprocess.run(
            [cli, "pipeline", "--profiles", profiles, "--lexicon", lexicon, "--kb", kb,
             "--out", out, "--expert-fraction", "1.0"],
            capture_output=True,
            text=True,
        )
        check(ok.returncode == 0, f"pipeline exit {ok.returncode}: {ok.stderr}")
        with open(out, encoding="utf-8") as fh:
            records = [json.loads(line) for line in fh if line.strip()]
        check(len(records) == 5, f"expected 5 taglines, got {len(records)}")
        check(all(r["tagline"] for r in records), "empty tagline in output")

        usage = subprocess.run([cli, "pipeline", "--no-such-flag"], capture_output=True)
        check(usage.returncode == 2, f"usage error exit {usage.returncode}")

        data = subprocess.run(
            [cli, "pipeline", "--profiles", os.path.join(tmp, "missing.jsonl"),
             "--lexicon", lexicon, "--kb", kb, "--out", out],
            capture_output=True,
        )
        check(data.returncode == 1, f"data error exit {data.returncode}")

        env = dict(os.environ, TAGLINEGEN_MAX_CHARS="12")
        short = subprocess.run(
            [cli, "pipeline", "--profiles", profiles, "--lexicon", lexicon, "--kb", kb,
             "--out", out, "--expert-fraction", "1.0"],
            capture_output=True,
            env=env,
        )
        check(short.returncode == 0, "env override run failed")
        with open(out, encoding="utf-8") as fh:
            records = [json.loads(line) for line in fh if line.strip()]
        check(all(len(r["tagline"]) <= 12 for r in records), "env max-chars ignored")

        # generate -> select staging
        cands = os.path.join(tmp, "candidates.jsonl")
        gen = subprocess.run(
            [cli, "generate", "--profiles", profiles, "--lexicon", lexicon, "--kb", kb,
             "--out", cands, "--expert-fraction", "1.0"],
            capture_output=True,
            text=True,
        )
        check(gen.returncode == 0, f"generate exit {gen.returncode}: {gen.stderr}")
        with open(cands, encoding="utf-8") as fh:
            cand_records = [json.loads(line) for line in fh if line.strip()]
        check(len(cand_records) >= 3, f"expected candidates, got {len(cand_records)}")
        check(all(c["method"] == "occupation_pattern" for c in cand_records), "method field")

        sel = subprocess.run(
            [cli, "select", "--candidates", cands, "--out", out],
            capture_output=True,
            text=True,
        )
        check(sel.returncode == 0, f"select exit {sel.returncode}: {sel.stderr}")
        with open(out, encoding="utf-8") as fh:
            selected = [json.loads(line) for line in fh if line.strip()]
        check(len(selected) == 3, f"expected 3 selected taglines, got {len(selected)}")
        check(all(r["screen_name"].startswith("name") for r in selected), "screen_name carry")

        cls = subprocess.run(
            [cli, "classify", "--profiles", profiles, "--out", out,
             "--expert-fraction", "1.0"],
            capture_output=True,
            text=True,
        )
        check(cls.returncode == 0, f"classify exit {cls.returncode}: {cls.stderr}")
        with open(out, encoding="utf-8") as fh:
            classified = [json.loads(line) for line in fh if line.strip()]
        check(len(classified) == 5, "classify covers every expert")
        check(all(r["method"] == "user_classification" for r in classified), "classify method")

        templates = os.path.join(tmp, "templates.tsv")
        with open(templates, "w", encoding="utf-8") as fh:
            for key in ("HHH", "HHL", "HLH", "HLL", "LHH", "LHL", "LLH", "LLL"):
                fh.write(f"{key}\tClass {key} voice\n")
        custom = subprocess.run(
            [cli, "classify", "--profiles", profiles, "--out", out,
             "--expert-fraction", "1.0", "--templates", templates],
            capture_output=True,
            text=True,
        )
        check(custom.returncode == 0, f"classify templates exit: {custom.stderr}")
        with open(out, encoding="utf-8") as fh:
            rows = [json.loads(line) for line in fh if line.strip()]
        check(all(r["tagline"].startswith("Class ") for r in rows), "custom templates unused")

        gen_csv = os.path.join(tmp, "generation.csv")
        with open(gen_csv, "w", encoding="utf-8") as fh:
            fh.write("item_id,judge_id,question,rating\n")
            fh.write("t1,j1,Q1,1\nt1,j2,Q1,1\nt1,j3,Q1,0\n")
            fh.write("t2,j1,Q1,0\nt2,j2,Q1,0\nt2,j3,Q1,2\n")
        ev = subprocess.run(
            [cli, "evaluate", "--generation", gen_csv], capture_output=True, text=True
        )
        check(ev.returncode == 0, f"evaluate exit {ev.returncode}: {ev.stderr}")
        check("Q1_majority_good_pct: 50" in ev.stdout, f"evaluate output: {ev.stdout}")
        check("Q1_good_pct: 50" in ev.stdout, "good_pct line missing")
        check("Q1_fleiss_kappa:" in ev.stdout, "fleiss line missing")


def main():
    tests = [
        test_worked_example,
        test_preprocess_and_windows,
        test_scoring,
        test_selection_roundtrip,
        test_error_mapping,
        test_cli_end_to_end,
    ]
    for test in tests:
        print(f"running {test.__name__}")
        test()
    print(f"ok: {len(tests)} smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
