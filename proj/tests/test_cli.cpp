#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wwords/cli.hpp"
#include "wwords/io.hpp"

using namespace wwords;

namespace {

  struct Run {
    int         code = 0;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    Run                r;
    r.code = run_cli(args, out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  bool contains(std::string const& s, std::string const& part) {
    return s.find(part) != std::string::npos;
  }

  std::string const corrupt = std::string(WWORDS_FIXTURES)
                              + "/schur-weighted-corrupt.json";

}  // namespace

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "theorem-2", "--qmax", "12"});
  CHECK(ok.code == exit_equal);
  CHECK(contains(ok.out, "result: equal"));

  auto bad = run({"verify", "theorem-2", "--system", corrupt, "--format",
                  "json", "--no-timing"});
  CHECK(bad.code == exit_mismatch);
  auto j = json::parse(bad.out);
  CHECK(j["equal"] == false);
  CHECK(j["first_mismatch"]["n"] == 3);
  CHECK(j["first_mismatch"]["monomial"] == json{{"a", 1}, {"b", 1}});
  CHECK(j["ms"] == 0);

  auto unknown = run({"verify", "nope"});
  CHECK(unknown.code == exit_error);
  CHECK(unknown.out.empty());
  CHECK(contains(unknown.err, "unknown identity"));

  auto inapplicable = run({"verify", "theorem-8-r1", "--engines", "product"});
  CHECK(inapplicable.code == exit_error);
  CHECK(contains(inapplicable.err, "enum"));

  CHECK(run({}).code == exit_error);
  CHECK(run({"verify"}).code == exit_error);
  CHECK(run({"verify", "theorem-2", "--qmax", "ten"}).code == exit_error);
}

TEST_CASE("json errors go to stdout as one document") {
  auto r = run({"verify", "nope", "--format", "json"});
  CHECK(r.code == exit_error);
  auto j = json::parse(r.out);
  CHECK(j.contains("error"));
}

TEST_CASE("json output is deterministic") {
  std::vector<std::string> args{"verify", "theorem-4", "--qmax", "20",
                                "--format", "json", "--no-timing",
                                "--seed", "5"};
  auto first  = run(args);
  auto second = run(args);
  CHECK(first.code == exit_equal);
  CHECK(first.out == second.out);
  CHECK(json::accept(first.out));
}

TEST_CASE("expand and enumerate") {
  auto e = run({"expand", "--product", "distinct-ab", "--qmax", "3"});
  CHECK(e.code == 0);
  CHECK(contains(e.out, "2: a + b + a*b\n"));

  auto s = run({"enumerate", "schur-dilated-mod3", "--qmax", "5"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "5: b + a^2\n"));

  auto rec = run({"enumerate", "schur-dilated-mod3", "--qmax", "5", "--engine",
                  "recurrence"});
  CHECK(rec.out == s.out);

  auto l = run({"enumerate", "distinct-odd", "--list", "9"});
  CHECK(contains(l.out, "2 partitions of 9"));

  auto fromfile = run({"enumerate", corrupt, "--qmax", "3", "--format", "json"});
  CHECK(fromfile.code == 0);
  auto j = json::parse(fromfile.out);
  CHECK(j["coefficients"].size() == 4);
}

TEST_CASE("dilate reproduces B2") {
  auto r = run({"dilate", "primc-weighted", "--modulus", "2", "--offsets",
                R"({"a": -1, "d": 1})"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "a: 4 1 3 2\nb: 3 0 2 1\nc: 1 2 0 3\nd: 2 3 1 4\n"));
  auto bad = run({"dilate", "primc-weighted", "--modulus", "2", "--offsets",
                  R"({"z": 1})"});
  CHECK(bad.code == exit_error);
}

TEST_CASE("check-eq") {
  CHECK(run({"check-eq", "schur-rec-a", "--qmax", "20"}).code == exit_equal);
  auto singular = run({"check-eq", "primc-qdiff", "--kmin", "2"});
  CHECK(singular.code == exit_error);
  CHECK(contains(singular.err, "k=2"));
}

TEST_CASE("discover and euler-factor") {
  auto d = run({"discover", "schur-dilated-mod3", "--primaries", "a,b",
                "--format", "json"});
  CHECK(d.code == 0);
  auto j = json::parse(d.out);
  CHECK(j["candidates"][0]["substitution"]["c"] == "a*b");

  auto f = run({"euler-factor", "--product", "partitions", "--qmax", "4"});
  CHECK(f.code == 0);
  CHECK(contains(f.out, "(q;q)_inf^-1"));
  CHECK(run({"euler-factor"}).code == exit_error);
}

TEST_CASE("list-presets") {
  auto r = run({"list-presets"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "primc-qdiff"));
  CHECK(contains(r.out, "theorem-8-r3"));
}
