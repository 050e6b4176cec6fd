// Command line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error or malformed input.

#include "treelie/documents.hpp"
#include "treelie/johnson.hpp"
#include "treelie/suite.hpp"
#include "treelie/symplectic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>

using namespace treelie;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
	if (path.empty() || path == "-")
		return std::string(std::istreambuf_iterator<char>(std::cin), {});
	std::ifstream in(path);
	if (!in)
		throw UsageError("cannot read " + path);
	return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text)
{
	if (path.empty() || path == "-")
	{
		std::cout << text;
		return;
	}
	std::ofstream out(path);
	if (!out)
		throw UsageError("cannot write " + path);
	out << text;
}

int verify(const std::string& in, int degree)
{
	const ExpansionMap theta = read_expansion(read_input(in));
	const SymplecticReport r = verify_symplectic(theta, degree);
	std::cout << r.message << "\n";
	return r.ok() ? 0 : kFailure;
}

int dims(int genus, int k, int n)
{
	const auto d = homology_dims(genus, k, n);
	std::size_t total = 0;
	std::cout << "degree dim\n";
	for (const auto& [deg, dim] : d)
	{
		std::cout << deg << " " << dim << "\n";
		total += dim;
	}
	std::cout << "total " << total << "\n";
	return 0;
}

int rank(int genus, int k)
{
	const PhiRankReport r = phi_rank(genus, k);
	std::cout << "rank " << r.rank << "\n"
	          << "dim H3 " << r.h3_dim << "\n"
	          << "dim trees " << r.tree_dim << "\n";
	return r.rank == r.h3_dim && r.tree_dim == r.h3_dim ? 0 : kFailure;
}

int tau(const std::string& path, int k)
{
	const LieAutomorphism psi = read_automorphism(read_input(path));
	const bool ok = tau_bracket_check(psi, k);
	nlohmann::json doc{{"kind", "johnson_tau"},
	                   {"k", k},
	                   {"bracket_check", ok},
	                   {"tau", nlohmann::json::parse(write_hl_tensor(tau_truncated(psi, k)))}};
	if (ok)
		doc["trees"] = nlohmann::json::parse(write_trees(tau_to_trees(psi, k)));
	std::cout << doc.dump(2) << "\n";
	return ok ? 0 : kFailure;
}

int mk(const std::string& path, int k)
{
	const LieAutomorphism psi = read_automorphism(read_input(path));
	std::cout << write_class(morita_mk(psi, k));
	return 0;
}

int suite(std::uint64_t seed)
{
	int failed = 0;
	run_suite({seed}, [&](const CriterionResult& r) {
		std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << std::endl;
		failed += r.pass ? 0 : 1;
	});
	return failed == 0 ? 0 : kFailure;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Symplectic expansions, tree diagrams and Johnson-type maps of free Lie algebras"};
	app.require_subcommand(1);
	std::function<int()> action;

	int genus = 0, degree = 0, k = 0, n = 0;
	std::uint64_t seed = 1;
	std::string in, out, aut;
	auto genus_opt = [&](CLI::App* c) { c->add_option("--genus", genus, "genus g")->required()->check(CLI::Range(1, 8)); };
	auto degree_opt = [&](CLI::App* c) {
		c->add_option("--degree", degree, "log-side truncation degree N")->required()->check(CLI::Range(1, 14));
	};

	auto* expand = app.add_subcommand("expand", "symplectic expansions")->require_subcommand(1);
	auto* construct = expand->add_subcommand("construct", "construct a symplectic expansion");
	genus_opt(construct);
	degree_opt(construct);
	construct->add_option("--out", out, "output file (default stdout)");
	construct->callback([&] {
		action = [&] {
			write_output(out, write_expansion(construct_symplectic(genus, degree)));
			return 0;
		};
	});

	auto* ver = expand->add_subcommand("verify", "check that an expansion is symplectic");
	ver->add_option("--in", in, "expansion document (default stdin)");
	degree_opt(ver);
	ver->callback([&] { action = [&] { return verify(in, degree); }; });

	auto* example = expand->add_subcommand("paper-example", "the explicit degree-4 symplectic expansion");
	genus_opt(example);
	example->add_option("--out", out, "output file (default stdout)");
	example->callback([&] {
		action = [&] {
			write_output(out, write_expansion(known_example_expansion(genus)));
			return 0;
		};
	});

	auto* magnus = expand->add_subcommand("magnus", "the Magnus expansion a_i -> 1 + a_i (not group-like)");
	genus_opt(magnus);
	degree_opt(magnus);
	magnus->add_option("--out", out, "output file (default stdout)");
	magnus->callback([&] {
		action = [&] {
			write_output(out, write_expansion(magnus_expansion(genus, degree)));
			return 0;
		};
	});

	auto* homology = app.add_subcommand("homology", "homology of free nilpotent Lie algebras")->require_subcommand(1);
	auto* hdims = homology->add_subcommand("dims", "graded dimensions of H_n(L/L_{>=K+1})");
	genus_opt(hdims);
	hdims->add_option("--class", k, "nilpotency class K")->required()->check(CLI::Range(1, 6));
	hdims->add_option("--n", n, "homological degree")->required()->check(CLI::IsMember({1, 2, 3}));
	hdims->callback([&] { action = [&] { return dims(genus, k, n); }; });

	auto* phi = app.add_subcommand("phi", "fission map")->require_subcommand(1);
	auto* prank = phi->add_subcommand("rank", "rank of Phi on T_K + ... + T_{2K-1}");
	genus_opt(prank);
	prank->add_option("--class", k, "nilpotency class K")->required()->check(CLI::Range(1, 4));
	prank->callback([&] { action = [&] { return rank(genus, k); }; });

	auto* johnson = app.add_subcommand("johnson", "Johnson-type maps")->require_subcommand(1);
	auto* jtau = johnson->add_subcommand("tau", "tau on degrees [k, 2k) and its tree preimage");
	jtau->add_option("--aut", aut, "automorphism document")->required();
	jtau->add_option("--k", k, "k")->required()->check(CLI::Range(1, 7));
	jtau->callback([&] { action = [&] { return tau(aut, k); }; });
	auto* jrandom = johnson->add_subcommand("random", "seeded random element of simulated IC[k]");
	genus_opt(jrandom);
	jrandom->add_option("--k", k, "k")->required()->check(CLI::Range(1, 7));
	jrandom->add_option("--seed", seed, "random seed");
	degree_opt(jrandom);
	jrandom->add_option("--out", out, "output file (default stdout)");
	jrandom->callback([&] {
		action = [&] {
			write_output(out, write_automorphism(random_ic_element(genus, k, seed, degree)));
			return 0;
		};
	});

	auto* morita = app.add_subcommand("morita", "infinitesimal Morita homomorphism")->require_subcommand(1);
	auto* mmk = morita->add_subcommand("mk", "class m_k in H_3(L/L_{>=k+1})");
	mmk->add_option("--aut", aut, "automorphism document")->required();
	mmk->add_option("--k", k, "k")->required()->check(CLI::Range(1, 7));
	mmk->callback([&] { action = [&] { return mk(aut, k); }; });

	auto* suite_cmd = app.add_subcommand("suite", "property suite")->require_subcommand(1);
	auto* srun = suite_cmd->add_subcommand("run", "run every acceptance property");
	srun->add_option("--seed", seed, "random seed");
	srun->callback([&] { action = [&] { return suite(seed); }; });

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		return app.exit(e) == 0 ? 0 : kUsage;
	}

	try
	{
		return action();
	}
	catch (const DocumentError& e)
	{
		std::cerr << "error: malformed document: " << e.what() << "\n";
		return kUsage;
	}
	catch (const UsageError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	}
	catch (const std::invalid_argument& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	}
	catch (const std::domain_error& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kUsage;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return kFailure;
	}
}
