#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qseries/cli.hpp"
#include "qseries/qcombinat.hpp"
#include "qseries/serialize.hpp"

using namespace qseries;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST_CASE("solve") {
  const Run json = run({"solve", "--k", "1", "--xmax", "4", "--qmax", "10", "--format", "json"});
  CHECK(json.code == 0);
  const RecursionFamily fam = family_from_json(parse_json(json.out));
  CHECK(fam == solve(1, 4, 10));
  CHECK(fam.members.size() == 2);
  CHECK_FALSE(json.err.empty());

  const Run tsv = run({"solve", "--k", "2", "--xmax", "10", "--qmax", "30", "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out.rfind("i\ta\tb\tcoeff\n0\t0\t0\t1\n", 0) == 0);

  CHECK(run({"solve", "--k", "0", "--xmax", "4", "--qmax", "10"}).code == 2);
  CHECK(run({"solve", "--k", "1", "--xmax", "-1", "--qmax", "10"}).code == 2);
  CHECK(run({"solve", "--k", "1", "--xmax", "4", "--qmax", "10", "--format", "xml"}).code == 2);
  CHECK(run({"solve", "--k", "abc", "--xmax", "4", "--qmax", "10"}).code == 2);
  CHECK(run({"solve", "--k", "1"}).code == 2);
  CHECK(run({"solve", "--k", "1", "--xmax", "4", "--qmax", "100000"}).code == 2);
}

TEST_CASE("verify-gordon") {
  for (const char* t : {"1", "2"}) {
    const Run r = run({"verify-gordon", "--l", "2", "--t", t, "--qmax", "40"});
    CHECK(r.code == 0);
    CHECK(count_lines_with(r.out, "\tmatch\t") == 3);
  }
  const Run l3 = run({"verify-gordon", "--l", "3", "--t", "3", "--qmax", "40"});
  CHECK(l3.code == 0);
  CHECK(count_lines_with(l3.out, "\tmatch\t") == 3);

  CHECK(run({"verify-gordon", "--l", "1", "--t", "1", "--qmax", "10"}).code == 2);
  CHECK(run({"verify-gordon", "--l", "3", "--t", "4", "--qmax", "10"}).code == 2);
}

TEST_CASE("oracle") {
  const Run r = run({"oracle", "--k", "1", "--e", "2", "--mmax", "4", "--wmax", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("m\tw\tdim\n", 0) == 0);
  CHECK(r.out.find("\n2\t4\t1\n") != std::string::npos);
  CHECK(r.out.find("\n2\t10\t4\n") != std::string::npos);

  const Run json =
      run({"oracle", "--k", "1", "--e", "2", "--mmax", "4", "--wmax", "10", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(series_from_json(parse_json(json.out)) == andrews_gordon_multisum(1, 1, 4, 10));

  const Run killed = run({"oracle", "--k", "2", "--e", "1", "--mmax", "3", "--wmax", "8"});
  CHECK(killed.code == 0);
  CHECK(killed.out.find("\n1\t1\t0\n") != std::string::npos);

  CHECK(run({"oracle", "--k", "1", "--e", "3", "--mmax", "4", "--wmax", "10"}).code == 2);
  CHECK(run({"oracle", "--k", "1", "--e", "0", "--mmax", "4", "--wmax", "10"}).code == 2);
}

TEST_CASE("crosscheck") {
  const Run k1 = run({"crosscheck", "--k", "1", "--mmax", "4", "--wmax", "12"});
  CHECK(k1.code == 0);
  CHECK(count_lines_with(k1.out, "\tmatch\t") == 6);

  const Run k2 = run({"crosscheck", "--k", "2", "--mmax", "3", "--wmax", "10"});
  CHECK(k2.code == 0);
  CHECK(count_lines_with(k2.out, "\tmatch\t") == 9);

  const Run empty = run({"crosscheck", "--k", "2", "--mmax", "0", "--wmax", "0"});
  CHECK(empty.code == 0);
  CHECK(count_lines_with(empty.out, "\tmatch\t") == 9);

  CHECK(run({"crosscheck", "--k", "1", "--mmax", "50", "--wmax", "12"}).code == 2);
}

TEST_CASE("check-recursions") {
  const std::string path = "cli_test_family.json";
  {
    std::ofstream f(path);
    f << dump(family_to_json(solve(3, 5, 15)));
  }
  const Run good = run({"check-recursions", "--input", path});
  CHECK(good.code == 0);
  CHECK(count_lines_with(good.out, "\tzero\t") == 4);

  RecursionFamily bad = solve(3, 5, 15);
  bad[2].at(2, 7) += 1;
  {
    std::ofstream f(path);
    f << dump(family_to_json(bad));
  }
  const Run mismatch = run({"check-recursions", "--input", path});
  CHECK(mismatch.code == 1);
  CHECK(count_lines_with(mismatch.out, "\tnonzero\t") >= 1);

  {
    std::ofstream f(path);
    f << "{\"k\":1}";
  }
  CHECK(run({"check-recursions", "--input", path}).code == 2);
  std::remove(path.c_str());
  CHECK(run({"check-recursions", "--input", "does/not/exist.json"}).code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"solve", "--k", "1", "--xmax", "2", "--qmax", "3", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const std::vector<std::string> args{"crosscheck", "--k", "2", "--mmax", "3", "--wmax", "9"};
  CHECK(run(args).out == run(args).out);
}
