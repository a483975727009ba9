#include "cli_app.hpp"

#include "hsdirac/clifford.hpp"
#include "hsdirac/errors.hpp"
#include "hsdirac/rep_theory.hpp"
#include "hsdirac/spectra.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ostream>

namespace hsdirac::cli {
namespace {

using json = nlohmann::ordered_json;

json document(const std::string& command, json parameters) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = command;
    doc["parameters"] = std::move(parameters);
    doc["rows"] = json::array();
    return doc;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string csv_quote(const std::string& s) {
    return s.find(',') == std::string::npos ? s : '"' + s + '"';
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
    int n = 0;
    int j = 0;
    long lmax = 5;
    std::string format = "json";
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
    const auto entries = spectrum(a.n, a.j, a.lmax);
    if (a.format == "csv") {
        out << "eigenvalue,multiplicity,branch,family,j,l,sign,ktype\n";
        for (const auto& e : entries) {
            out << e.eigenvalue.to_string() << ',' << e.multiplicity.get_str() << ',' << to_string(e.tag) << ','
                << to_string(e.ktype.family) << ',' << e.ktype.j << ',' << e.ktype.l << ',' << e.ktype.sign << ','
                << csv_quote(e.ktype.weight.to_string()) << '\n';
        }
        return kOk;
    }
    json doc = document("spectrum", {{"n", a.n}, {"j", a.j}, {"lmax", a.lmax}});
    for (const auto& e : entries) {
        doc["rows"].push_back({{"eigenvalue", e.eigenvalue.to_string()},
                               {"multiplicity", e.multiplicity.get_str()},
                               {"branch", to_string(e.tag)},
                               {"ktype", {{"family", to_string(e.ktype.family)},
                                          {"j", e.ktype.j},
                                          {"l", e.ktype.l},
                                          {"sign", e.ktype.sign},
                                          {"weight", e.ktype.weight.to_string()}}}});
    }
    doc["summary"] = {{"operator", a.j == 0 ? "Dirac" : "higher spin Dirac D_{lambda_j} = -D~_j"},
                      {"group", GroupId(a.n + 1).name()},
                      {"entries", entries.size()},
                      {"symmetric", true}};
    emit(out, doc);
    return kOk;
}

int cmd_dim(int n, const std::string& weight, std::ostream& out) {
    const Weight w = Weight::parse(GroupId(n), weight);
    json doc = document("dim", {{"n", n}, {"weight", weight}});
    doc["rows"].push_back({{"group", w.group().name()},
                           {"weight", w.to_string()},
                           {"dimension", weyl_dim(w).get_str()},
                           {"casimir", casimir_scalar(w).to_string()}});
    json summary = json::object();
    if (w.group().is_even() && w[w.size() - 1].sign() != 0) {
        auto flipped = w.entries();
        flipped.back() = -flipped.back();
        const Weight f(w.group(), flipped);
        summary["note"] = "flipping the sign of the last entry gives (" + f.to_string() +
                          ") with the same dimension " + weyl_dim(f).get_str();
    }
    doc["summary"] = summary;
    emit(out, doc);
    return kOk;
}

int cmd_branch(int n, const std::string& weight, const std::string& direction, const std::string& a1max,
               std::ostream& out) {
    json params = {{"n", n}, {"weight", weight}, {"direction", direction}};
    if (direction == "down") {
        const Weight alpha = Weight::parse(GroupId(n + 1), weight);
        json doc = document("branch", params);
        BigInt sum = 0;
        for (const auto& lam : branch_down(alpha)) {
            const BigInt d = weyl_dim(lam);
            sum += d;
            doc["rows"].push_back({{"weight", lam.to_string()}, {"dimension", d.get_str()}});
        }
        const BigInt total = weyl_dim(alpha);
        doc["summary"] = {{"from", alpha.group().name()},
                          {"to", GroupId(n).name()},
                          {"dimension", total.get_str()},
                          {"sum_of_components", sum.get_str()},
                          {"identity_holds", total == sum}};
        emit(out, doc);
        return kOk;
    }
    if (a1max.empty()) throw ParseError("branch --direction up needs --a1max");
    params["a1max"] = a1max;
    const Weight lam = Weight::parse(GroupId(n), weight);
    const auto alphas = branch_up(lam, HalfInt::parse(a1max));
    json doc = document("branch", params);
    for (const auto& alpha : alphas)
        doc["rows"].push_back({{"weight", alpha.to_string()}, {"dimension", weyl_dim(alpha).get_str()}});
    doc["summary"] = {{"from", lam.group().name()}, {"to", GroupId(n + 1).name()}, {"count", alphas.size()}};
    emit(out, doc);
    return kOk;
}

int cmd_decompose(int n, int k, std::ostream& out) {
    const GroupId g(n);
    json doc = document("decompose", {{"n", n}, {"k", k}});
    BigInt sum = 0;
    for (const auto& c : spinor_form_components(g, k)) {
        json weights = json::array();
        for (const auto& w : c.weights) weights.push_back(w.to_string());
        sum += c.dimension;
        doc["rows"].push_back({{"j", c.j},
                               {"weights", weights},
                               {"dimension", c.dimension.get_str()},
                               {"casimir", casimir_scalar(c.weights.front()).to_string()}});
    }
    const BigInt expected = binomial(n, k) * spinor_dim(g);
    doc["summary"] = {{"group", g.name()},
                      {"sum_of_components", sum.get_str()},
                      {"binomial_times_spinor_dim", expected.get_str()},
                      {"identity_holds", sum == expected}};
    emit(out, doc);
    return kOk;
}

int cmd_ratio(int n, const std::string& alpha, const std::string& alpha_prime, std::ostream& out) {
    const GroupId k(n + 1);
    const Weight a = Weight::parse(k, alpha);
    const Weight b = Weight::parse(k, alpha_prime);
    json doc = document("ratio", {{"n", n}, {"alpha", alpha}, {"alpha_prime", alpha_prime}});
    const Rational za = z_function(n, a);
    const Rational zb = z_function(n, b);
    doc["rows"].push_back({{"weight", a.to_string()}, {"z", za.to_string()}});
    doc["rows"].push_back({{"weight", b.to_string()}, {"z", zb.to_string()}});
    doc["summary"] = {{"ratio", (za / zb).to_string()}};
    emit(out, doc);
    return kOk;
}

struct VerifyArgs {
    int nmax = 9;
    long lmax = 12;
    int clifford_cap = kDefaultCliffordCap;
    bool swap_pairing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const Pairing pairing = a.swap_pairing ? Pairing::Swapped : Pairing::Validated;
    json params = {{"nmax", a.nmax}, {"lmax", a.lmax}, {"clifford_cap", a.clifford_cap}};
    if (a.swap_pairing) params["swap_pairing"] = true;
    json doc = document("verify", params);
    long cases = 0;
    long failures = 0;

    for (int n = 2; n <= a.nmax; ++n) {
        const auto rep = verify_consistency(n, n, a.lmax, pairing);
        json fails = json::array();
        for (const auto& f : rep.failures)
            fails.push_back({{"where", f.where}, {"expected", f.expected}, {"got", f.got}});
        doc["rows"].push_back({{"suite", "spectra"},
                               {"n", n},
                               {"cases", rep.cases_checked},
                               {"passed", rep.passed()},
                               {"failures", fails}});
        cases += rep.cases_checked;
        failures += static_cast<long>(rep.failures.size());
    }
    for (int n = 3; n <= a.nmax; n += 2) {
        for (int j = 0; 2 * j < n; ++j) {
            doc["rows"].push_back({{"suite", "normalization-diagnostic"},
                                   {"n", n},
                                   {"j", j},
                                   {"constant", normalization_constant_diagnostic(n, j, 1).to_string()}});
        }
    }
    for (int n = 2; n <= std::min(a.nmax, a.clifford_cap); ++n) {
        for (const auto& c : run_clifford_checks(n, a.clifford_cap)) {
            json row = {{"suite", "clifford"}, {"check", c.name}, {"n", c.n}};
            if (c.k_form >= 0) row["k_form"] = c.k_form;
            if (c.j >= 0) row["j"] = c.j;
            row["passed"] = c.passed;
            if (!c.detail.empty()) row["detail"] = c.detail;
            doc["rows"].push_back(row);
            ++cases;
            failures += c.passed ? 0 : 1;
        }
    }
    doc["summary"] = {{"pairing", to_string(pairing)},
                      {"cases", cases},
                      {"failures", failures},
                      {"passed", failures == 0}};
    emit(out, doc);
    return failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra of higher spin Dirac operators on spheres"};
    app.require_subcommand(1);

    SpectrumArgs sp;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and multiplicities of D_{lambda_j} on S^n");
    spectrum_cmd->add_option("--n", sp.n, "sphere dimension")->required()->check(CLI::Range(2, 1000));
    spectrum_cmd->add_option("--j", sp.j, "ladder index, 0 <= j < n/2 (0 is the Dirac operator)")->required();
    spectrum_cmd->add_option("--lmax", sp.lmax, "largest level l")->capture_default_str()->check(CLI::Range(0L, 100000L));
    spectrum_cmd->add_option("--format", sp.format)->capture_default_str()->check(CLI::IsMember({"json", "csv"}));

    int dim_n = 0;
    std::string dim_weight;
    auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension and Casimir scalar of a Spin(n) weight");
    dim_cmd->add_option("--n", dim_n, "group Spin(n)")->required();
    dim_cmd->add_option("--weight", dim_weight, "highest weight, e.g. 3/2,1/2")->required();

    int br_n = 0;
    std::string br_weight;
    std::string br_dir = "down";
    std::string br_a1max;
    auto* branch_cmd = app.add_subcommand("branch", "branching between Spin(n+1) and Spin(n)");
    branch_cmd->add_option("--n", br_n, "the smaller group Spin(n)")->required();
    branch_cmd->add_option("--weight", br_weight, "Spin(n+1) weight (down) or Spin(n) weight (up)")->required();
    branch_cmd->add_option("--direction", br_dir)->capture_default_str()->check(CLI::IsMember({"up", "down"}));
    branch_cmd->add_option("--a1max", br_a1max, "upper bound on the first entry (up)");

    int dc_n = 0;
    int dc_k = 0;
    auto* decompose_cmd = app.add_subcommand("decompose", "E^{k,j} components of spinor-valued k-forms");
    decompose_cmd->add_option("--n", dc_n)->required();
    decompose_cmd->add_option("--k", dc_k, "form degree")->required();

    int rt_n = 0;
    std::string rt_alpha;
    std::string rt_alpha_prime;
    auto* ratio_cmd = app.add_subcommand("ratio", "Z(alpha)/Z(alpha') for Spin(n+1) weights");
    ratio_cmd->add_option("--n", rt_n, "sphere dimension")->required();
    ratio_cmd->add_option("--alpha", rt_alpha)->required();
    ratio_cmd->add_option("--alpha-prime", rt_alpha_prime)->required();

    VerifyArgs vf;
    auto* verify_cmd = app.add_subcommand("verify", "run every exact cross-check");
    verify_cmd->add_option("--nmax", vf.nmax)->capture_default_str()->check(CLI::Range(2, 64));
    verify_cmd->add_option("--lmax", vf.lmax)->capture_default_str()->check(CLI::Range(1L, 10000L));
    verify_cmd->add_option("--clifford-cap", vf.clifford_cap)->capture_default_str()->check(CLI::Range(2, 12));
    verify_cmd->add_flag("--swap-pairing", vf.swap_pairing)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*spectrum_cmd) return cmd_spectrum(sp, out);
        if (*dim_cmd) return cmd_dim(dim_n, dim_weight, out);
        if (*branch_cmd) return cmd_branch(br_n, br_weight, br_dir, br_a1max, out);
        if (*decompose_cmd) return cmd_decompose(dc_n, dc_k, out);
        if (*ratio_cmd) return cmd_ratio(rt_n, rt_alpha, rt_alpha_prime, out);
        if (*verify_cmd) return cmd_verify(vf, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hsdirac::cli
