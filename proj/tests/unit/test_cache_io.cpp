#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hankelcat/cache_io.hpp"

using namespace hankelcat;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const char* dir = std::getenv("HANKELCAT_TEST_TMP");
  fs::path p = fs::path(dir ? dir : fs::temp_directory_path().string()) / ("cache_io_" + name);
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("record format") {
  HankelKey key{catalan(4), -3, 9};
  CHECK(format_record(key, Int(56)) == "catalan\t4\t-3\t9\t56");
  CHECK(format_record({central_binomial(2), 0, 1}, Int(-1)) == "binomial\t2\t0\t1\t-1");
  auto rec = parse_record("catalan\t4\t-3\t9\t56");
  REQUIRE(rec);
  CHECK(rec->key == key);
  CHECK(rec->value == 56);
  Int big("-123456789012345678901234567890");
  auto back = parse_record(format_record(key, big));
  REQUIRE(back);
  CHECK(back->value == big);
}

TEST_CASE("malformed records are rejected") {
  CHECK_FALSE(parse_record(""));
  CHECK_FALSE(parse_record("catalan\t4\t-3\t9"));
  CHECK_FALSE(parse_record("catalan 4 -3 9 56"));
  CHECK_FALSE(parse_record("fibonacci\t4\t-3\t9\t56"));
  CHECK_FALSE(parse_record("catalan\t0\t-3\t9\t56"));
  CHECK_FALSE(parse_record("catalan\t4\t-3\t-1\t56"));
  CHECK_FALSE(parse_record("catalan\t4\t-3\t9\t5x6"));
  CHECK_FALSE(parse_record("catalan\t4\t-3\t9\t56\textra"));
}

TEST_CASE("store then load round-trips") {
  auto path = temp_file("roundtrip.tsv");
  DetTable computed;
  auto values = computed.sequence(catalan(3), 1, 12, 2);
  CHECK(store_cache(path.string(), computed) == 11);
  CHECK(store_cache(path.string(), computed) == 0);

  auto read = read_cache(path.string());
  CHECK(read.warnings.empty());
  REQUIRE(read.records.size() == 11);

  DetTable loaded;
  auto res = load_cache(path.string(), loaded);
  CHECK(res.loaded == 11);
  CHECK(res.warnings.empty());
  for (const auto& r : read.records) {
    CHECK(loaded.lookup(r.key).value() == bareiss_det(hankel_matrix(r.key)));
  }
  CHECK(loaded.sequence(catalan(3), 1, 12) == values);
  CHECK(loaded.take_unpersisted().empty());

  auto again = load_cache(path.string(), loaded);
  CHECK(again.already_present == 11);
}

TEST_CASE("missing file reads as empty") {
  auto path = temp_file("missing.tsv");
  CHECK(read_cache(path.string()).records.empty());
  CHECK(verify_cache(path.string()).sampled == 0);
}

TEST_CASE("corrupt lines are skipped with a warning") {
  auto path = temp_file("corrupt.tsv");
  spit(path, "catalan\t3\t1\t1\t3\ngarbage line\ncatalan\t3\t1\t2\t3\n");
  auto read = read_cache(path.string());
  CHECK(read.records.size() == 2);
  REQUIRE(read.warnings.size() == 1);
  CHECK(read.warnings[0].find(":2") != std::string::npos);
}

TEST_CASE("verify passes on untouched data and catches tampering") {
  auto path = temp_file("tamper.tsv");
  DetTable t;
  t.sequence(catalan(4), -3, 13, 2);
  store_cache(path.string(), t);
  auto ok = verify_cache(path.string(), 1.0, 1, 2);
  CHECK(ok.sampled == ok.records);
  CHECK(ok.divergences.empty());

  std::string text = slurp(path);
  auto pos = text.find("\t56\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "\t57\n");
  spit(path, text);
  auto bad = verify_cache(path.string(), 1.0, 1, 2);
  REQUIRE(bad.divergences.size() == 1);
  CHECK(bad.divergences[0].stored == 57);
  CHECK(bad.divergences[0].recomputed == 56);

  DetTable fresh;
  fresh.value({catalan(4), -3, 9});
  auto conflict = load_cache(path.string(), fresh);
  CHECK_FALSE(conflict.warnings.empty());
  CHECK(fresh.value({catalan(4), -3, 9}) == 56);
}

TEST_CASE("sampling size and determinism") {
  auto path = temp_file("sample.tsv");
  DetTable t;
  t.sequence(catalan(2), 0, 40, 2);
  store_cache(path.string(), t);
  auto a = verify_cache(path.string(), 0.01, 7, 1);
  CHECK(a.records == 39);
  CHECK(a.sampled == 1);
  auto b = verify_cache(path.string(), 0.1, 7, 1);
  CHECK(b.sampled == 4);
}
