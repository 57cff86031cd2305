// Command-line driver, exercised in-process: output shapes, JSON schema,
// exit codes, and byte-identical repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "polyhopf/cli.hpp"
#include <sstream>

using namespace polyhopf;
using nlohmann::json;

namespace {

struct RunResult
{
	int code;
	std::string out, err;
};

RunResult invoke(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("dissections of the triangle")
{
	RunResult r = invoke({"dissections", "--polygon", "1,2,3"});
	CHECK(r.code == 0);
	// 4 dissections, one line each
	int lines = 0;
	for (char c : r.out)
		lines += (c == '\n');
	CHECK(lines == 4);
	RunResult j = invoke({"dissections", "--polygon", "1,2,3", "--format", "json"});
	CHECK(j.code == 0);
	json parsed = json::parse(j.out);
	CHECK(parsed["schema"] == "1");
	CHECK(parsed["dissections"].size() == 4);
	CHECK(parsed["dissections"][0] == "{}");
}

TEST_CASE("tree of a single-arrow dissection")
{
	RunResult r = invoke({"tree", "--polygon", "1,2,3,4,5,6", "--rule", "phi2",
	                      "--dissection", "2->6"});
	CHECK(r.code == 0);
	CHECK(r.out.find("tree(") != std::string::npos);
	CHECK(r.out.substr(0, 4) == "1 * ");
}

TEST_CASE("lambda output lists the frozen weight-2 terms")
{
	RunResult r = invoke({"lambda", "--polygon", "a,b,c", "--rule", "phi2",
	                      "--format", "json"});
	CHECK(r.code == 0);
	json parsed = json::parse(r.out);
	CHECK(parsed["schema"] == "1");
	REQUIRE(parsed["terms"].size() == 4);
	// terms come back in the deterministic sum order
	bool found = false;
	for (auto const &t : parsed["terms"])
		if (t["term"] == "[a,c|b,a]")
		{
			found = true;
			CHECK(t["coeff"] == "-1");
		}
	CHECK(found);
}

TEST_CASE("boundary output")
{
	RunResult r = invoke({"boundary", "--polygon", "a,b,c", "--rule", "phi2",
	                      "--format", "json"});
	CHECK(r.code == 0);
	json parsed = json::parse(r.out);
	CHECK(parsed["terms"].size() == 3);
}

TEST_CASE("verify exit codes and report shape")
{
	RunResult ok = invoke({"verify", "--polygon", "1,2,3,4", "--identity", "relate",
	                       "--format", "json"});
	CHECK(ok.code == 0);
	json parsed = json::parse(ok.out);
	CHECK(parsed["schema"] == "1");
	CHECK(parsed["holds"] == true);
	CHECK(parsed["defect"] == "0");
	CHECK(parsed.count("millis") == 0);

	// unsupported weight for this identity -> usage error
	RunResult bad = invoke({"verify", "--polygon", "1,2,3", "--identity",
	                        "phi_re_not_hopf"});
	CHECK(bad.code == 2);
	CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("verify-all runs the whole table")
{
	RunResult r = invoke({"verify-all", "--max-weight", "2", "--threads", "2"});
	CHECK(r.code == 0);
	CHECK(r.out.find("all identities hold") != std::string::npos);
	CHECK(r.out.find("FAILS") == std::string::npos);
}

TEST_CASE("repeated runs are byte-identical")
{
	std::vector<std::string> cmds[] = {
	    {"lambda", "--polygon", "1,2,3,4", "--rule", "phi_re", "--format", "json"},
	    {"verify", "--polygon", "1,2,3", "--identity", "orientsign", "--format", "json"},
	    {"verify-all", "--max-weight", "2", "--format", "json"},
	    {"eval", "--args", "4,2,1"},
	};
	for (auto const &cmd : cmds)
	{
		RunResult a = invoke(cmd);
		RunResult b = invoke(cmd);
		CHECK(a.code == b.code);
		CHECK(a.out == b.out);
	}
}

TEST_CASE("eval emits value and tail bound as JSON")
{
	RunResult r = invoke({"eval", "--args", "4,1"});
	CHECK(r.code == 0);
	json parsed = json::parse(r.out);
	CHECK(parsed["schema"] == "1");
	double value = parsed["value"];
	CHECK(std::fabs(value - std::log(0.75)) < 1e-10);
	CHECK(double(parsed["tail_bound"]) < 1e-8);
	// divergent input -> usage error
	RunResult bad = invoke({"eval", "--args", "1,2"});
	CHECK(bad.code == 2);
	// unachievable tolerance -> exit 1
	RunResult tight = invoke({"eval", "--args", "100,99,98", "--depth", "5", "--tol", "1e-12"});
	CHECK(tight.code == 1);
}

TEST_CASE("usage errors exit with 2 and help exits with 0")
{
	RunResult none = invoke({});
	CHECK(none.code == 2);
	RunResult unknown = invoke({"frobnicate"});
	CHECK(unknown.code == 2);
	RunResult missing = invoke({"lambda"});
	CHECK(missing.code == 2);
	RunResult badrule = invoke({"lambda", "--polygon", "a,b,c", "--rule", "phi9"});
	CHECK(badrule.code == 2);
	RunResult help = invoke({"--help"});
	CHECK(help.code == 0);
	CHECK(help.out.find("dissections") != std::string::npos);
}
