#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "proc.hpp"

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

TEST_CASE("cli: index evaluates inline graph6 tokens") {
  CHECK(run_cli("index --input Bw").output == "64\n");  // K_3, default pi1
  CHECK(run_cli("index --input Bw --index pi2").output == "64\n");
  CHECK(run_cli("index --input D~o --index pi1").output == "82944\n");
  CHECK(run_cli("index --input D~o --index pi2").output == "191102976\n");
  CHECK(run_cli("index --input Bw --index m1").output == "12\n");
  CHECK(run_cli("index --input Bw --index m2").output == "12\n");
  CHECK(run_cli("index --input @ --index pi1").output == "0\n");  // K_1

  CliResult log = run_cli("index --input Bw --log");
  CHECK(log.exit_code == 0);
  CHECK(log.output == fmt12(std::log(64.0)) + "\n");
}

TEST_CASE("cli: index reads multi-graph stdin in both formats") {
  CliResult g6 = run_cli("index --input -", "Bw\nBg");
  CHECK(g6.exit_code == 0);
  CHECK(g6.output == "64\n4\n");  // K_3 then P_3

  CliResult edges = run_cli("index --input - --input-format edges",
                            "3 2\n0 1\n1 2");
  CHECK(edges.exit_code == 0);
  CHECK(edges.output == "4\n");  // P_3 again, via the edge-list reader
}

TEST_CASE("cli: construct emits graphs that round-trip through index") {
  CHECK(run_cli("construct knk --n 5 --k 2").output == "D~o\n");
  CHECK(run_cli("construct complete --n 3").output == "Bw\n");
  CHECK(run_cli("construct path --n 3").output == "Bg\n");

  // graph6 round-trip: construct | index.
  CliResult g6 = run_cli("construct star --n 5");
  CliResult back = run_cli("index --input -", g6.output);
  CHECK(back.output == "16\n");  // pi1(S_5) = (n-1)^2

  // edge-list round-trip with an explicit format override on stdin.
  CliResult doc = run_cli("construct sandwich --j 2 --h @ --m 2 --format edges");
  CHECK(doc.exit_code == 0);
  CHECK(doc.output == "5 6\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n");
  CliResult p1 = run_cli("index --input - --input-format edges", doc.output);
  CHECK(p1.output == "4096\n");
  CliResult conn = run_cli("connectivity --input - --input-format edges",
                           doc.output);
  CHECK(conn.output == "1 2\n");  // the middle vertex is a cut vertex

  // --n is optional for sandwich but must agree when given.
  CHECK(run_cli("construct sandwich --j 2 --h @ --m 2 --n 5").exit_code == 0);
  CliResult clash = run_cli("construct sandwich --j 2 --h @ --m 2 --n 7");
  CHECK(clash.exit_code == 2);
  CHECK(clash.output.find("contradicts") != std::string::npos);
}

TEST_CASE("cli: connectivity prints kappa and kappa_prime") {
  CHECK(run_cli("connectivity --input D~o").output == "2 2\n");
  CHECK(run_cli("connectivity --input Bw").output == "2 2\n");
  CHECK(run_cli("connectivity --input @").output == "0 0\n");
  CliResult multi = run_cli("connectivity --input -", "Bw\nBg");
  CHECK(multi.output == "2 2\n1 1\n");
}

TEST_CASE("cli: enumerate streams sorted unique graph6 lines") {
  CliResult r = run_cli("enumerate --n 6");
  CHECK(r.exit_code == 0);
  std::vector<std::string> forms = lines_of(r.output);
  CHECK(forms.size() == 112);
  CHECK(std::is_sorted(forms.begin(), forms.end()));
  CHECK(std::set<std::string>(forms.begin(), forms.end()).size() == 112);

  CHECK(lines_of(run_cli("enumerate --n 7 --trees").output).size() == 11);
  CHECK(run_cli("enumerate --n 4 --kappa-max 1").output == "Cq\nCs\nC{\n");
  CHECK(lines_of(run_cli("enumerate --n 5 --kappa-prime-max 4").output)
            .size() == 21);

  // The restriction flags are mutually exclusive.
  CHECK(run_cli("enumerate --n 4 --trees --kappa-max 1").exit_code == 2);
  CHECK(run_cli("enumerate --n 4 --kappa-max 1 --kappa-prime-max 1")
            .exit_code == 2);
}

TEST_CASE("cli: ZAGREB_MAX_N moves the enumeration guard") {
  CliResult blocked = run_cli("enumerate --n 6", "", "ZAGREB_MAX_N=5");
  CHECK(blocked.exit_code == 2);
  CHECK(blocked.output.find("cost guard") != std::string::npos);

  CliResult allowed = run_cli("enumerate --n 6", "", "ZAGREB_MAX_N=6");
  CHECK(allowed.exit_code == 0);
  CHECK(lines_of(allowed.output).size() == 112);

  // Values beyond the hard cap clamp silently; the cap itself still holds.
  CliResult capped = run_cli("enumerate --n 10", "", "ZAGREB_MAX_N=99");
  CHECK(capped.exit_code == 2);

  CliResult bad = run_cli("enumerate --n 3", "", "ZAGREB_MAX_N=banana");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("positive integer") != std::string::npos);
}

TEST_CASE("cli: malformed input produces exit 2 with a line diagnostic") {
  std::string path = "cli_bad_input.edges";
  {
    std::ofstream out(path);
    out << "3 2\n0 1\nbad line\n";
  }
  CliResult r = run_cli("index --input " + path);
  std::remove(path.c_str());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 3") != std::string::npos);

  CliResult missing = run_cli("index --input ./nosuch.g6");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("cannot open") != std::string::npos);

  CliResult token = run_cli("index --input 'B '");
  CHECK(token.exit_code == 2);

  CHECK(run_cli("index").exit_code == 2);         // missing required --input
  CHECK(run_cli("frobnicate").exit_code == 2);    // unknown subcommand
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("enumerate --help").exit_code == 0);
}

TEST_CASE("cli: verify emits a parseable deterministic report") {
  CliResult r = run_cli("verify --claims lem4 --n-max 4");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["claim_id"] == "lem4");
  CHECK(doc[0]["params"]["n"] == 3);
  CHECK(doc[0]["status"] == "confirmed");
  CHECK(doc[0]["closed_form"].is_null());
  CHECK(doc[0]["elapsed_ms"] == 0);
  CHECK(doc[1]["params"]["n"] == 4);

  // Same bytes from fresh processes at different job counts.
  CliResult one = run_cli("verify --claims thm1,thm3 --n-max 5 --jobs 1");
  CliResult four = run_cli("verify --claims thm1,thm3 --n-max 5 --jobs 4");
  CHECK(one.exit_code == 0);
  CHECK(one.output == four.output);

  // --report writes the identical bytes to a file instead of stdout.
  std::string path = "cli_report.json";
  CliResult filed =
      run_cli("verify --claims thm1,thm3 --n-max 5 --report " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::remove(path.c_str());
  CHECK(buf.str() == one.output);

  CHECK(run_cli("verify --claims thm9 --n-max 4").exit_code == 2);
  CHECK(run_cli("verify --claims '' --n-max 4").exit_code == 2);
  CHECK(run_cli("verify --claims all --n-max 99").exit_code == 2);
}
