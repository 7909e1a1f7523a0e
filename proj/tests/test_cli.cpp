#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string cli() { return QFEJER_CLI_PATH; }

// Runs a full shell line and captures stdout. stderr is left alone so a
// failing test still shows the tool's message in the log.
RunResult run_line(const std::string& line) {
  RunResult r;
  FILE* pipe = popen(line.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_cli(const std::string& args) { return run_line(cli() + " " + args); }

}  // namespace

TEST_CASE("eval prints canonical text") {
  // terms are canonical per monomial; collapsing the projection-sum identity
  // to 1 is the job of eq, not of the printed list
  RunResult r = run_cli("eval \"S(2)S(2)' + U S(2) S(2)' U'\"");
  CHECK(r.status == 0);
  CHECK(r.out == "S(2) S(2)' + u(-1) S(2) S(2)' U\n");

  r = run_cli("eval \"u(3) S(2) u(5)\"");
  CHECK(r.status == 0);
  CHECK(r.out == "u(13) S(2)\n");

  r = run_cli("--json eval \"2 S(2)\"");
  CHECK(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["system"] == "q2");
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["p"] == 2);
  CHECK(j["terms"][0]["re"] == nlohmann::json::array({2, 1}));
}

TEST_CASE("eq decides equality and always exits zero on a verdict") {
  RunResult r = run_cli("eq \"S(2)S(2)' + U S(2) S(2)' U'\" \"I\"");
  CHECK(r.status == 0);
  CHECK(r.out == "equal\n");

  r = run_cli("eq \"U\" \"S(2)\"");
  CHECK(r.status == 0);
  CHECK(r.out == "different\n");

  r = run_cli("--json eq \"U' U\" \"I\"");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["equal"] == true);
}

TEST_CASE("generator output feeds back through the expression reader") {
  RunResult r = run_line(cli() + " fourier \"$(" + cli() +
                         " thompson x0)\" --p 1 --q 2");
  CHECK(r.status == 0);
  CHECK(r.out == "S(4) S(4)'\n");

  r = run_line(cli() + " eq \"$(" + cli() + " fourier \"$(" + cli() +
               " thompson x0)\" --p 2 --q 1)\" \"S(2) (U S(2)) (U S(2) U S(2))'\"");
  CHECK(r.status == 0);
  CHECK(r.out == "equal\n");

  r = run_cli("--json thompson x1");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["terms"].size() == 4);

  r = run_cli("--system qn thompson x0");
  CHECK(r.status == 1);
}

TEST_CASE("weights kernels and certificates are scriptable") {
  RunResult r = run_cli("phi --n 2 --h 1");
  CHECK(r.status == 0);
  CHECK(r.out == "4/5\n");

  r = run_cli("phi --n 1 --h 2");
  CHECK(r.status == 0);
  CHECK(r.out == "1/3\n");

  r = run_cli("--system qn phi --n 2 --h \"1,-2\"");
  CHECK(r.status == 0);
  CHECK(r.out == "12/25\n");

  r = run_cli("--json kernel --n 1");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 5);

  r = run_cli("psd --n 3 --sample \"-2;-1;0;1;2\"");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("psd: true", 0) == 0);

  r = run_cli("--json psd --n 1 --sample \"0;1;2;3\"");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["psd"] == true);
}

TEST_CASE("apply and commutes report in plain text") {
  RunResult r = run_cli("apply \"S(2)\" --k 3");
  CHECK(r.status == 0);
  CHECK(r.out == "6: 1\n");

  r = run_cli("apply \"S(2)'\" --k 3");
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");

  r = run_cli("commutes \"U\" --gens 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("commutes: false", 0) == 0);

  r = run_cli("commutes \"3/2\" --gens \"2,4,8\"");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("commutes: true", 0) == 0);
}

TEST_CASE("report emits the CSV golden rows") {
  RunResult r = run_cli("report \"S(2)\" --nmax 2 --csv");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "n,B_n_num,B_n_den,lower_sq_num,lower_sq_den,exact_equal\n"
        "0,1,1,1,1,false\n"
        "1,1,3,1,9,false\n"
        "2,1,5,1,25,false\n");

  r = run_cli("--json report \"S(2)\" --nmax 1");
  CHECK(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["id"] == "S(2)");
  CHECK(j["rows"].size() == 2);
}

TEST_CASE("element files load with @ and @-") {
  RunResult r = run_cli("--json eval \"u(-1) + i S(4)\"");
  REQUIRE(r.status == 0);
  std::string path = "/tmp/qfejer_cli_element.json";
  {
    std::ofstream out(path);
    out << r.out;
  }
  RunResult again = run_cli("eval @" + path);
  CHECK(again.status == 0);
  CHECK(again.out == run_cli("eval \"u(-1) + i S(4)\"").out);

  RunResult stdin_run =
      run_line("cat " + path + " | " + cli() + " eq @- \"u(-1) + i S(4)\"");
  CHECK(stdin_run.status == 0);
  CHECK(stdin_run.out == "equal\n");

  RunResult mismatch = run_cli("--system qn eval @" + path + " 2>/dev/null");
  CHECK(mismatch.status == 1);
  CHECK(mismatch.out.empty());

  std::remove(path.c_str());
}

TEST_CASE("failures exit nonzero and stay parseable with --json") {
  RunResult r = run_cli("eval \"S(3)\" 2>/dev/null");
  CHECK(r.status == 1);
  CHECK(r.out.empty());

  r = run_cli("--json eval \"S(3)\" 2>/dev/null");
  CHECK(r.status == 1);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.contains("error"));

  r = run_cli("eval \"U +\" 2>/dev/null");
  CHECK(r.status == 1);

  r = run_cli("2>/dev/null");
  CHECK(r.status == 1);

  r = run_cli("--help");
  CHECK(r.status == 0);
  CHECK(r.out.find("eval") != std::string::npos);
}
