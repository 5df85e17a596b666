#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LCE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("lce_cli_test_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path / name, std::ios::binary) << content;
    return (path / name).string();
  }
  std::string at(const std::string& name) const { return (path / name).string(); }
};

std::uintmax_t size_of(const std::string& p) { return fs::file_size(p); }

}  // namespace

TEST_CASE("build writes an LCEX container and query answers the example") {
  TempDir dir;
  const auto input = dir.file("ex.txt", "abababcabababcabababcd");
  const auto index = dir.at("ex.idx");
  const auto built = run("build " + input + " --t 4 -o " + index);
  CHECK(built.status == 0);
  CHECK(built.out.find("code_len:") != std::string::npos);
  std::ifstream f(index, std::ios::binary);
  std::string magic(4, '\0');
  f.read(magic.data(), 4);
  CHECK(magic == "LCEX");

  const auto q = run("query " + index + " --pair 1 8 --pair 5 5");
  CHECK(q.status == 0);
  CHECK(q.out == "1 8 14\n5 5 19\n");

  const auto oob = run("query " + index + " --pair 1 8 --pair 1 24");
  CHECK(oob.status == 2);
  CHECK(oob.out == "1 8 14\n1 24 out_of_range\n");

  const auto pairs = dir.file("pairs.txt", "1 15\n2 9\n");
  CHECK(run("query " + index + " --pairs-file " + pairs).out == "1 15 7\n2 9 13\n");
}

TEST_CASE("random queries are deterministic") {
  TempDir dir;
  const auto input = dir.file("fib.txt", "");
  CHECK(run("gen fibonacci --n 5000 -o " + input).status == 0);
  const auto index = dir.at("fib.idx");
  REQUIRE(run("build " + input + " --t 8 --t-prime 2 --packed -o " + index).status == 0);
  const auto a = run("query " + index + " --random 1000 --seed 7");
  const auto b = run("query " + index + " --random 1000 --seed 7");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1000);
  CHECK(run("query " + index + " --random 1000 --seed 7 --packed").out == a.out);
  CHECK(run("query " + index + " --random 1000 --seed 8").out != a.out);
}

TEST_CASE("usage and IO errors map to exit codes") {
  TempDir dir;
  const auto input = dir.file("x.txt", "hello world");
  CHECK(run("build " + input + " --t 0").status == 2);
  CHECK(run("build " + input + " --t 100").status == 2);
  CHECK(run("build " + input + " --t 3 --t-prime 4").status == 2);
  CHECK(run("build " + dir.at("missing.txt") + " --t 3").status == 3);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("query " + dir.at("missing.idx") + " --pair 1 2").status == 3);
  const auto junk = dir.file("junk.idx", "LCEX garbage");
  CHECK(run("stats " + junk).status == 3);
  CHECK(run("build " + dir.file("empty.txt", "") + " --t 1").status == 2);
}

TEST_CASE("auto-tune on a unary text beats t = 1") {
  TempDir dir;
  const auto input = dir.file("unary.txt", std::string(100000, 'a'));
  REQUIRE(run("build " + input + " --auto-tune -o " + dir.at("tuned.idx")).status == 0);
  REQUIRE(run("build " + input + " --t 1 -o " + dir.at("one.idx")).status == 0);
  CHECK(size_of(dir.at("tuned.idx")) < size_of(dir.at("one.idx")));
  const auto stats = run("stats " + dir.at("tuned.idx") + " --json");
  CHECK(stats.status == 0);
  CHECK(stats.out.find("\"t\": 1,") == std::string::npos);
}

TEST_CASE("bench checks every query against the oracle") {
  TempDir dir;
  const auto input = dir.file("fib.txt", "");
  REQUIRE(run("gen fibonacci --n 100000 -o " + input).status == 0);
  const auto csv = dir.at("bench.csv");
  const auto one = run("bench " + input + " --t 64 --queries 100000 --seed 3 --threads 1 --corpus fib --csv " + csv);
  CHECK(one.status == 0);
  const auto four = run("bench " + input + " --t 64 --queries 100000 --seed 3 --threads 4 --corpus fib --csv " + csv);
  CHECK(four.status == 0);
  std::ifstream f(csv);
  std::string header, row1, row2;
  std::getline(f, header);
  std::getline(f, row1);
  std::getline(f, row2);
  CHECK(header ==
        "corpus,n,sigma,z,t,t_prime,build_ms,index_bytes,queries,mean_query_ns,p99_query_ns,oracle_mean_ns,mismatches");
  CHECK(row1.substr(0, 4) == "fib,");
  CHECK(row1.substr(row1.rfind(',')) == ",0");
  CHECK(row2.substr(row2.rfind(',')) == ",0");
}

TEST_CASE("tune, stats, lz77 and selftest") {
  TempDir dir;
  const auto input = dir.file("ex.txt", "abababcabababcabababcd");
  const auto lz = run("lz77 " + input + " --factors");
  CHECK(lz.status == 0);
  CHECK(lz.out.rfind("z: 6\n", 0) == 0);
  CHECK(lz.out.find("8 14 1 abababcabababc\n") != std::string::npos);
  const auto tune = run("tune " + input);
  CHECK(tune.status == 0);
  CHECK(tune.out.find("t* = ") != std::string::npos);
  CHECK(run("selftest").status == 0);
}
