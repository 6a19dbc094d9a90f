/*
 * Copyright 2026 The llsdim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_dir() {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("llsdim_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir.string();
}

RunResult run_cli(const std::string& args, const std::string& dir) {
    std::string out_path = dir + "/out.txt";
    std::string cmd = std::string(LLSDIM_CLI_PATH) + " " + args + " > " + out_path +
                      " 2> " + dir + "/err.txt";
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    return res;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    REQUIRE(out.good());
}

const char* kTriangle =
    "curve v1\n"
    "vertex a genus=0\nvertex b genus=0\nvertex c genus=0\n"
    "edge e1 a b n=1\nedge e2 b c n=1\nedge e3 c a n=1\n";

const char* kChain =
    "curve v1\n"
    "vertex a genus=0\nvertex b genus=0\n"
    "edge e1 a b n=1\nedge e2 a b n=1\n";

const char* kPair =
    "curve v1\n"
    "vertex u genus=0\nvertex v genus=0\n"
    "edge e u v n=1\n";

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string cur;
    while (std::getline(in, cur))
        if (cur == line) return true;
    return false;
}

}  // namespace

TEST_CASE("cli: rho record and exit code") {
    std::string dir = temp_dir();
    RunResult r = run_cli("rho --genus 3 --rank 1 --degree 2", dir);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "rho=-1"));
}

TEST_CASE("cli: validate rejects the triangle with a stable token") {
    std::string dir = temp_dir();
    write_file(dir + "/triangle.curve", kTriangle);
    RunResult r = run_cli("validate " + dir + "/triangle.curve", dir);
    CHECK(r.exit_code == 2);
    CHECK(has_line(r.out, "error=NotPseudocompactType"));
}

TEST_CASE("cli: genericity failure carries the witness and exit 1") {
    std::string dir = temp_dir();
    write_file(dir + "/chain.curve", kChain);
    RunResult r = run_cli("genericity " + dir + "/chain.curve --degree 4", dir);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("witness_floor_sum=2") != std::string::npos);
    CHECK(has_line(r.out, "overall=false"));
}

TEST_CASE("cli: audit output is byte-identical across worker counts") {
    std::string dir = temp_dir();
    write_file(dir + "/pair.curve", kPair);
    std::string base = "audit " + dir + "/pair.curve --degree 2 --rank 1 --list-strata";
    RunResult w1 = run_cli(base + " --workers 1", dir);
    RunResult w2 = run_cli(base + " --workers 2", dir);
    RunResult w8 = run_cli(base + " --workers 8", dir);
    CHECK(w1.exit_code == 0);
    CHECK(w1.out == w2.out);
    CHECK(w1.out == w8.out);
    CHECK(has_line(w1.out, "rho=2"));
    CHECK(has_line(w1.out, "maxexpdim=2"));
    // the stratum record format is stable
    CHECK(w1.out.find("stratum id=0 refined=") != std::string::npos);
}

TEST_CASE("cli: unknown flags are rejected") {
    std::string dir = temp_dir();
    RunResult r = run_cli("rho --genus 3 --rank 1 --degree 2 --nonsense", dir);
    CHECK(r.exit_code == 2);
    CHECK(has_line(r.out, "error=Usage"));
}

TEST_CASE("cli: binary subcommands") {
    std::string dir = temp_dir();
    RunResult yes = run_cli("binary g12 --points1 0,1,inf,2 --points2 0,1,inf,2", dir);
    CHECK(yes.exit_code == 0);
    CHECK(has_line(yes.out, "g12=true"));
    RunResult no = run_cli("binary g12 --points1 0,1,inf,2 --points2 0,1,inf,3", dir);
    CHECK(no.exit_code == 1);
    CHECK(has_line(no.out, "g12=false"));
    RunResult ranges = run_cli("binary ranges --genus 17", dir);
    CHECK(ranges.exit_code == 0);
    CHECK(has_line(ranges.out, "ranges_ok=true"));
}

TEST_CASE("cli: tropical subcommands on a chain-structure curve") {
    std::string dir = temp_dir();
    write_file(dir + "/loop.curve",
               "curve v1\n"
               "vertex u genus=0\nvertex v genus=0\n"
               "edge p u v n=2\nedge q u v n=1\n");
    // the subdivided graph is a triangle u - p.1 - v - u
    RunResult rank = run_cli("tropical rank " + dir + "/loop.curve --chips u=2", dir);
    CHECK(rank.exit_code == 0);
    CHECK(has_line(rank.out, "rank=1"));

    RunResult red = run_cli(
        "tropical reduce " + dir + "/loop.curve --chips p.1=2 --at u", dir);
    CHECK(red.exit_code == 0);
    CHECK(has_line(red.out, "degree=2"));

    RunResult fire = run_cli(
        "tropical fire " + dir + "/loop.curve --chips p.1=2 --set p.1", dir);
    CHECK(fire.exit_code == 0);
    CHECK(has_line(fire.out, "chip vertex=p.1 count=0"));
    CHECK(has_line(fire.out, "chip vertex=u count=1"));
    CHECK(has_line(fire.out, "chip vertex=v count=1"));
}

TEST_CASE("cli: genus and degeneration") {
    std::string dir = temp_dir();
    write_file(dir + "/pair.curve", kPair);
    RunResult g = run_cli("genus " + dir + "/pair.curve", dir);
    CHECK(g.exit_code == 0);
    CHECK(has_line(g.out, "genus=0"));

    // alternating chain with (2,3) double edges passes the checker
    std::ostringstream chain;
    chain << "curve v1\n";
    for (char c = 'a'; c <= 'f'; ++c) chain << "vertex " << c << " genus=0\n";
    chain << "edge e0 a b n=2\nedge e1 a b n=3\n"
          << "edge e2 b c n=1\n"
          << "edge e3 c d n=2\nedge e4 c d n=3\n"
          << "edge e5 d e n=1\n"
          << "edge e6 e f n=2\nedge e7 e f n=3\n";
    write_file(dir + "/alt.curve", chain.str());
    RunResult good = run_cli("degeneration " + dir + "/alt.curve", dir);
    CHECK(good.exit_code == 0);
    CHECK(has_line(good.out, "degeneration=true"));

    // same chain with trivial chain structure has genus 3 and fails at d = 4
    std::string flat = chain.str();
    for (auto pos = flat.find("n=2"); pos != std::string::npos; pos = flat.find("n=2"))
        flat.replace(pos, 3, "n=1");
    for (auto pos = flat.find("n=3"); pos != std::string::npos; pos = flat.find("n=3"))
        flat.replace(pos, 3, "n=1");
    write_file(dir + "/flat.curve", flat);
    RunResult bad = run_cli("degeneration " + dir + "/flat.curve", dir);
    CHECK(bad.exit_code == 1);
    CHECK(has_line(bad.out, "degeneration=false"));

    write_file(dir + "/unknown.curve",
               "curve v1\nvertex a genus=2\nvertex b genus=0\nedge e a b n=1\n");
    RunResult blocked = run_cli("degeneration " + dir + "/unknown.curve", dir);
    CHECK(blocked.exit_code == 2);
    CHECK(has_line(blocked.out, "error=UnknownFlag"));
}

TEST_CASE("cli: text format for scalar reports") {
    std::string dir = temp_dir();
    RunResult r = run_cli("rho --genus 3 --rank 1 --degree 2 --format text", dir);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "rho = -1"));
    RunResult b = run_cli("binary ranges --genus 5 --format text", dir);
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("contained") != std::string::npos);
}

TEST_CASE("cli: divseq and concentrate records") {
    std::string dir = temp_dir();
    write_file(dir + "/pair.curve", kPair);
    RunResult conc = run_cli("concentrate " + dir + "/pair.curve --degree 2 --at u", dir);
    CHECK(conc.exit_code == 0);
    CHECK(has_line(conc.out, "seed=u"));
    CHECK(has_line(conc.out, "family_b pair=u-v b=2"));

    RunResult ds = run_cli(
        "divseq " + dir + "/pair.curve --degree 2 --at u --toward v", dir);
    CHECK(ds.exit_code == 0);
    CHECK(has_line(ds.out, "entry i=0 degree=0 support="));
    CHECK(has_line(ds.out, "stats c=3 critical=0,1,2 f=1,1,1"));
}
