// Command-line front end: every subcommand reads JSON (inline or from a file)
// and prints a single JSON report on stdout.
//
// Exit codes: 0 success, 2 rejected input (bad JSON, failed precondition,
// usage error), 1 internal error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mz/io.hpp"
#include "mz/selftest.hpp"

namespace {

using mz::io::json;

constexpr std::uint64_t kDefaultSeed = 20240229;

/// Structured rejection printed as {"error": {...}} with exit code 2.
struct InputError {
  std::string message;
  std::optional<std::size_t> byte;
};

/// An argument is a file path if such a file exists, inline JSON otherwise.
json readJson(const std::string& arg, const std::string& what) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError{"malformed JSON in " + what + ": " + e.what(), e.byte};
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << v;
  return out.str();
}

std::size_t subsetRootCap() {
  const char* env = std::getenv("MZ_MAX_SUBSET_ROOTS");
  if (env == nullptr || *env == '\0') return mz::kDefaultMaxSubsetRoots;
  try {
    std::size_t used = 0;
    long v = std::stol(env, &used);
    if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw mz::DomainError(std::string("MZ_MAX_SUBSET_ROOTS must be a positive integer, got \"") + env + "\"");
}

/// Accumulates the canonical inputs (for the digest) and the report payload.
struct Report {
  std::string command;
  json inputs = json::object();
  json payload = json::object();
};

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

void runDecide(Report& r, const std::string& specArg, bool withOracle) {
  json in = readJson(specArg, "--spec");
  r.inputs["spec"] = in;
  auto spec = mz::normalize(mz::io::specFromJson(in));
  const auto cap = subsetRootCap();
  auto verdict = mz::decideMZ(spec, cap);
  r.payload = mz::io::toJson(verdict, spec.rootData());
  r.payload["normalizedRoots"] = mz::io::toJson(spec.rootData());
  if (withOracle) r.payload["oracleIsMZ"] = mz::oracleDecideMZ(spec, cap);
}

void runOracle(Report& r, const std::string& specArg) {
  json in = readJson(specArg, "--spec");
  r.inputs["spec"] = in;
  auto spec = mz::normalize(mz::io::specFromJson(in));
  r.payload["isMZ"] = mz::oracleDecideMZ(spec, subsetRootCap());
  r.payload["normalizedRoots"] = mz::io::toJson(spec.rootData());
}

void runIdempotents(Report& r, const std::string& rootsArg, const std::string& modulusArg) {
  std::optional<mz::RootData<mz::Rational>> roots;
  if (!rootsArg.empty()) {
    json in = readJson(rootsArg, "--roots");
    r.inputs["roots"] = in;
    roots = mz::io::rootDataFromJson(in);
  } else {
    json in = readJson(modulusArg, "--modulus");
    r.inputs["modulus"] = in;
    auto split = mz::rationalRoots(mz::io::polyFromJson(in));
    if (!split.splits()) {
      throw mz::DomainError("modulus does not split over Q; unsplit factor " + split.unsplitFactor.toString());
    }
    roots = split.roots;
  }
  if (roots->size() > subsetRootCap()) throw mz::DomainError("too many roots for subset enumeration");
  auto ring = mz::QuotientRing<mz::Rational>::create(*roots);
  json list = json::array();
  for (const auto& entry : mz::allIdempotents(*ring)) {
    json subset = json::array();
    for (auto i : entry.subset) subset.push_back((*roots)[i].value.toString());
    list.push_back({{"subset", subset}, {"idempotent", mz::io::toJson(entry.value.representative())}});
  }
  r.payload["roots"] = mz::io::toJson(*roots);
  r.payload["modulus"] = mz::io::toJson(ring->modulus());
  r.payload["idempotents"] = list;
}

void runMoments(Report& r, const std::string& specArg, std::size_t count, const std::string& valuesArg,
                const std::string& charPolyArg) {
  if (!specArg.empty()) {
    json in = readJson(specArg, "--spec");
    r.inputs["spec"] = in;
    r.inputs["count"] = count;
    auto spec = mz::io::specFromJson(in);
    json all = json::array();
    for (const auto& L : spec.functionals) {
      json seq = json::array();
      for (const auto& v : mz::toMoments(L, count)) seq.push_back(v.toString());
      all.push_back(seq);
    }
    r.payload["moments"] = all;
    return;
  }
  json values = readJson(valuesArg, "--values");
  json charPoly = readJson(charPolyArg, "--charpoly");
  r.inputs["values"] = values;
  r.inputs["charpoly"] = charPoly;
  std::vector<mz::Rational> seq;
  for (const auto& v : mz::io::detail::array(values, "values")) seq.push_back(mz::io::rationalFromJson(v));
  auto f = mz::io::polyFromJson(charPoly);
  auto split = mz::rationalRoots(f);
  if (!split.splits()) throw mz::DomainError("characteristic polynomial does not split over Q");
  auto L = mz::fromMoments(mz::MomentSeq<mz::Rational>{seq, f}, split.roots);
  r.payload["roots"] = mz::io::toJson(split.roots);
  r.payload["functional"] = mz::io::toJson(L);
}

void runCertify(Report& r, const std::string& rule, const std::string& polyArg, std::size_t mMin,
                std::size_t searchBound) {
  json in = readJson(polyArg, "--poly");
  r.inputs = {{"rule", rule}, {"poly", in}, {"mMin", mMin}, {"searchBound", searchBound}};
  auto f = mz::io::polyFromJson(in);
  auto cert = rule == "unit" ? mz::certifyUnitInterval(f, mMin, searchBound)
                             : mz::certifyExponential(f, mMin, searchBound);
  r.payload["found"] = cert.has_value();
  if (cert) r.payload.update(mz::io::toJson(*cert));
}

void runTrace(Report& r, const std::string& matrixArg) {
  json in = readJson(matrixArg, "--matrix");
  r.inputs["matrix"] = in;
  auto c = mz::io::matrixFromJson(in);
  auto report = mz::traceRadicalTest(c);
  json traces = json::array();
  for (const auto& t : report.traces) traces.push_back(t.toString());
  r.payload["inRadical"] = report.inRadical;
  r.payload["traces"] = traces;
  r.payload["characteristicPolynomial"] = mz::io::toJson(mz::characteristicPolynomial(c));
  if (report.nilpotencyWitness) r.payload["nilpotencyIndex"] = *report.nilpotencyWitness;
}

void runLaurent(Report& r, const std::string& lambdaArg, const std::string& polyArg) {
  r.inputs["lambda"] = lambdaArg;
  auto lambda = mz::Rational::parse(lambdaArg);
  r.payload["lambda"] = lambda.toString();
  r.payload["isMZ"] = mz::laurentMZClass(lambda);
  if (polyArg.empty()) return;
  json in = readJson(polyArg, "--poly");
  r.inputs["poly"] = in;
  auto g = mz::io::laurentFromJson(in);
  r.payload["inImage"] = mz::laurentImageMembership(lambda, g);
  if (auto h = mz::laurentPreimage(lambda, g)) r.payload["preimage"] = mz::io::toJson(*h);
  if (lambda == mz::Rational(-1)) r.payload["inRadical"] = mz::radicalVminus1Membership(g);
}

void runGvc(Report& r, const std::string& opArg, const std::string& pArg, const std::string& qArg,
            std::size_t mMax) {
  json p = readJson(pArg, "--p");
  json q = readJson(qArg, "--q");
  auto P = mz::io::multiPolyFromJson(p);
  auto Q = mz::io::multiPolyFromJson(q);
  mz::ConstCoeffOp op;
  if (opArg == "laplacian") {
    r.inputs["op"] = opArg;
    op = mz::ConstCoeffOp::laplacian(P.vars());
  } else {
    json o = readJson(opArg, "--op");
    r.inputs["op"] = o;
    op.symbol = mz::io::multiPolyFromJson(o);
  }
  r.inputs["p"] = p;
  r.inputs["q"] = q;
  r.inputs["mMax"] = mMax;
  auto report = mz::gvcProbe(op, P, Q, mMax);
  r.payload["mMax"] = report.mMax;
  r.payload["hypothesisViolations"] = report.hypothesisViolations;
  r.payload["conclusionFailures"] = report.conclusionFailures;
  r.payload["conclusionTransition"] =
      report.conclusionTransition ? json(*report.conclusionTransition) : json(nullptr);
}

template <std::uint32_t P>
void runImagepAt(Report& r, const std::string& mode, std::size_t n, const json& input, const json& gInput) {
  auto f = mz::io::zxPolyFromJson<P>(input, n);
  if (mode == "decide") {
    r.payload = mz::io::toJson(mz::imDDecide(f));
  } else if (mode == "jideal") {
    auto cert = mz::jIdealWitness(f);
    r.payload["found"] = cert.has_value();
    if (cert) r.payload["certificate"] = mz::io::toJson(*cert);
  } else if (mode == "corollary") {
    auto report = mz::corollaryCheck(f);
    r.payload["powerDecision"] = mz::io::toJson(report.powerDecision);
    r.payload["counterexamples"] = report.counterexamples;
  } else {
    auto g = gInput.is_null() ? mz::ZXPoly<P>::constant(n, mz::Zp<P>(1)) : mz::io::zxPolyFromJson<P>(gInput, n);
    auto report = mz::charPTheoremCheck(f, g);
    r.payload["hypothesisHolds"] = report.hypothesisHolds();
    r.payload["hypothesis"] = mz::io::toJson(report.hypothesis);
    if (report.hypothesisHolds()) {
      r.payload["conclusionHolds"] = report.conclusionHolds();
      r.payload["atPSquared"] = mz::io::toJson(*report.atPSquared);
      r.payload["atPSquaredPlus1"] = mz::io::toJson(*report.atPSquaredPlus1);
      r.payload["jIdealAtPSquared"] = report.jIdealAtPSquared;
      r.payload["jIdealAtPSquaredPlus1"] = report.jIdealAtPSquaredPlus1;
    }
  }
}

void runImagep(Report& r, const std::string& mode, unsigned p, std::size_t n, const std::string& inputArg,
               const std::string& gArg) {
  json input = readJson(inputArg, "--input");
  json g = gArg.empty() ? json(nullptr) : readJson(gArg, "--g");
  r.inputs = {{"mode", mode}, {"p", p}, {"n", n}, {"input", input}, {"g", g}};
  if (n == 0 || n > mz::ImagepLimits{}.maxPairs) throw mz::DomainError("--n must be between 1 and 3");
  switch (p) {
    case 2: runImagepAt<2>(r, mode, n, input, g); break;
    case 3: runImagepAt<3>(r, mode, n, input, g); break;
    case 5: runImagepAt<5>(r, mode, n, input, g); break;
    default: throw mz::DomainError("--p must be one of 2, 3, 5");
  }
}

bool runSelftest(Report& r, std::uint64_t seed) {
  r.inputs["seed"] = seed;
  json checks = json::array();
  bool ok = true;
  for (const auto& c : mz::selftest::runAll(seed)) {
    json entry = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}};
    if (!c.passed()) entry["firstFailure"] = c.firstFailure;
    checks.push_back(entry);
    ok = ok && c.passed();
  }
  r.payload["checks"] = checks;
  r.payload["passed"] = ok;
  return ok;
}

json errorJson(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedures and probes for Mathieu-Zhao spaces"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Include wall time in the report (breaks byte-identical output)");

  Report report;
  std::function<bool()> action;

  std::string spec, roots, modulus, values, charPoly, rule, poly, matrix, lambda, op, pPoly, qPoly, input, gPoly;
  std::string mode;
  bool withOracle = false;
  std::size_t count = 0, mMin = 1, searchBound = 500, mMax = 12, n = 1;
  unsigned prime = 2;
  std::uint64_t seed = kDefaultSeed;

  auto* decide = app.add_subcommand("decide", "Decide whether ker L is an MZ-space");
  decide->add_option("--spec", spec, "Subspace spec (JSON or file)")->required();
  decide->add_flag("--oracle", withOracle, "Also run the brute-force idempotent oracle");
  decide->callback([&] { action = [&] { runDecide(report, spec, withOracle); return true; }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force MZ decision over all idempotents");
  oracle->add_option("--spec", spec, "Subspace spec (JSON or file)")->required();
  oracle->callback([&] { action = [&] { runOracle(report, spec); return true; }; });

  auto* idem = app.add_subcommand("idempotents", "All idempotents of k[t]/(f)");
  auto* rootsOpt = idem->add_option("--roots", roots, "Root data [[\"lambda\", m], ...]");
  auto* modOpt = idem->add_option("--modulus", modulus, "Split modulus as a coefficient array");
  rootsOpt->excludes(modOpt);
  idem->require_option(1);
  idem->callback([&] { action = [&] { runIdempotents(report, roots, modulus); return true; }; });

  auto* moments = app.add_subcommand("moments", "Moment sequences and recovery of functionals");
  auto* specOpt = moments->add_option("--spec", spec, "Spec whose functionals to expand");
  auto* countOpt = moments->add_option("--count", count, "Number of moments")->needs(specOpt);
  auto* valuesOpt = moments->add_option("--values", values, "Moment values")->excludes(specOpt);
  moments->add_option("--charpoly", charPoly, "Characteristic polynomial")->needs(valuesOpt);
  specOpt->needs(countOpt);
  moments->require_option(2);
  moments->callback([&] { action = [&] { runMoments(report, spec, count, values, charPoly); return true; }; });

  auto* certify = app.add_subcommand("certify", "p-adic certificate that L(f^m) != 0");
  certify->add_option("--rule", rule, "Moment rule")->required()->check(CLI::IsMember({"unit", "exp"}));
  certify->add_option("--poly", poly, "Polynomial f as a coefficient array")->required();
  certify->add_option("--m-min", mMin, "Smallest exponent to try");
  certify->add_option("--search-bound", searchBound, "Number of exponents to try");
  certify->callback([&] { action = [&] { runCertify(report, rule, poly, mMin, searchBound); return true; }; });

  auto* trace = app.add_subcommand("trace-test", "Radical test for the trace-zero subspace");
  trace->add_option("--matrix", matrix, "Square matrix as rows of rationals")->required();
  trace->callback([&] { action = [&] { runTrace(report, matrix); return true; }; });

  auto* laurent = app.add_subcommand("laurent", "Image of t d/dt + lambda on Laurent polynomials");
  laurent->add_option("--lambda", lambda, "The rational lambda")->required();
  laurent->add_option("--poly", poly, "Laurent polynomial {\"exponent\": coefficient}");
  laurent->callback([&] { action = [&] { runLaurent(report, lambda, poly); return true; }; });

  auto* gvc = app.add_subcommand("gvc-probe", "Bounded vanishing-conjecture probe");
  gvc->add_option("--op", op, "Operator symbol as a multivariate polynomial, or \"laplacian\"")->required();
  gvc->add_option("--p", pPoly, "P")->required();
  gvc->add_option("--q", qPoly, "Q")->required();
  gvc->add_option("--m-max", mMax, "Largest exponent m")->check(CLI::PositiveNumber);
  gvc->callback([&] { action = [&] { runGvc(report, op, pPoly, qPoly, mMax); return true; }; });

  auto* imagep = app.add_subcommand("imagep", "ImD membership over F_p[zeta][x]");
  imagep->add_option("mode", mode, "decide | theorem | corollary | jideal")
      ->required()
      ->check(CLI::IsMember({"decide", "theorem", "corollary", "jideal"}));
  imagep->add_option("--p", prime, "Characteristic (2, 3 or 5)")->required();
  imagep->add_option("--n", n, "Number of variable pairs")->required();
  imagep->add_option("--input", input, "ZXPoly (JSON or file)")->required();
  imagep->add_option("--g", gPoly, "Multiplier g for the theorem mode (default 1)");
  imagep->callback([&] { action = [&] { runImagep(report, mode, prime, n, input, gPoly); return true; }; });

  auto* selftest = app.add_subcommand("selftest", "Run the seeded invariant suite");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->callback([&] { action = [&] { return runSelftest(report, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << errorJson("usage", e.what()).dump(2) << '\n';
    return 2;
  }
  report.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    ok = action();
  } catch (const InputError& e) {
    json out = errorJson("parse", e.message);
    if (e.byte) out["error"]["byte"] = *e.byte;
    std::cout << out.dump(2) << '\n';
    return 2;
  } catch (const mz::DomainError& e) {
    std::cout << errorJson("domain", e.what()).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cout << errorJson("internal", e.what()).dump(2) << '\n';
    return 1;
  }

  json out = {{"command", report.command}, {"inputDigest", hex(fnv1a(report.inputs.dump()))}};
  out.update(report.payload);
  if (timing) {
    out["wallTimeMs"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << out.dump(2) << '\n';
  return ok ? 0 : 1;
}
