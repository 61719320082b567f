#include "jtp/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "jtp/classifier.hpp"
#include "jtp/errors.hpp"
#include "jtp/evaluatable.hpp"
#include "jtp/families.hpp"
#include "jtp/herm2.hpp"
#include "jtp/io.hpp"
#include "jtp/scalar_maps.hpp"
#include "jtp/verifier.hpp"

namespace jtp {

namespace {

struct CliConfig {
    std::string in_arg;
    std::string out_path;
    std::uint64_t seed = 42;
    int n_samples = 10000;
    double tol = 1e-8;
};

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Document arguments accept inline JSON (first non-space character '{' or
// '[') or a filesystem path; an empty argument means stdin.
std::string read_document(const std::string& arg, std::istream& in) {
    if (arg.empty()) return slurp(in);
    std::size_t i = arg.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (arg[i] == '{' || arg[i] == '[')) return arg;
    std::ifstream f(arg);
    if (!f) throw ParseError("cannot open input file '" + arg + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const io::Json& doc, const std::string& out_path, std::ostream& out) {
    std::string text = io::dump_pinned(doc) + "\n";
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw DomainError("cannot open output file '" + out_path + "'");
    f << text;
}

int require_pm_one(int v, const char* what) {
    if (v != 1 && v != -1) throw ParseError(std::string(what) + " must be +1 or -1");
    return v;
}

struct GenOptions {
    std::string form;
    int sign = +1;
    std::string u_arg;
    std::string beta_arg;
    std::string tilde = "A";
    std::string hom1_arg;
    std::string hom2_arg;
};

int cmd_gen(const GenOptions& g, const CliConfig& cfg, std::istream& in, std::ostream& out) {
    require_pm_one(g.sign, "--sign");
    io::Json j;
    j["form"] = g.form;
    if (g.form != "i") j["sign"] = g.sign;
    if (g.u_arg.empty()) {
        j["U"] = io::unitary_to_json(Unitary2::identity());
    } else {
        j["U"] = io::parse_text(read_document(g.u_arg, in));
    }
    if (g.form == "i") {
        ScalarJtpHom def(MultiplicativeModel::one(MultDomain::NonNegReals), EtaTable());
        j["hom1"] = g.hom1_arg.empty() ? io::scalar_hom_to_json(def)
                                       : io::parse_text(read_document(g.hom1_arg, in));
        j["hom2"] = g.hom2_arg.empty() ? io::scalar_hom_to_json(def)
                                       : io::parse_text(read_document(g.hom2_arg, in));
    }
    if (g.form == "iv") {
        j["beta"] = g.beta_arg.empty()
                        ? io::mult_model_to_json(MultiplicativeModel::one(MultDomain::NonZeroReals))
                        : io::parse_text(read_document(g.beta_arg, in));
        j["tilde"] = g.tilde;
    }
    FamilySpec spec = io::family_from_json(j);
    emit(io::family_to_json(spec), cfg.out_path, out);
    return 0;
}

int cmd_eval(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    FamilySpec spec = io::family_from_json(io::parse_text(read_document(cfg.in_arg, in)));
    Herm2 a = io::matrix_from_json(io::parse_text(slurp(in)));
    emit(io::matrix_to_json(eval_family(spec, a)), cfg.out_path, out);
    return 0;
}

// Pairs implied by a transcript: (A, B) such that A, B and ABA all appear
// among the recorded inputs.
std::vector<std::pair<Herm2, Herm2>> transcript_pairs(const std::vector<TranscriptEntry>& entries) {
    std::vector<std::pair<Herm2, Herm2>> pairs;
    for (const auto& ea : entries) {
        for (const auto& eb : entries) {
            Herm2 aba = jordan_triple(ea.in, eb.in);
            for (const auto& ek : entries) {
                if (frobenius(ek.in - aba) <= 1e-12 * std::max(1.0, frobenius(aba))) {
                    pairs.emplace_back(ea.in, eb.in);
                    break;
                }
            }
        }
    }
    return pairs;
}

int cmd_verify(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    io::Json j = io::parse_text(read_document(cfg.in_arg, in));
    if (j.is_array()) {
        auto entries = io::transcript_from_json(j);
        EvaluatableMap m = map_from_transcript(entries);
        VerificationReport rep = verify_jtp_on_pairs(m, transcript_pairs(entries), cfg.tol);
        emit(io::verification_to_json(rep), cfg.out_path, out);
        return rep.passed ? 0 : 1;
    }
    FamilySpec spec = io::family_from_json(j);
    EvaluatableMap m = map_from_spec(spec);
    VerificationReport rep = verify_jtp(m, cfg.n_samples, cfg.seed, cfg.tol);
    rep.properties = verify_corollaries(m, cfg.seed, cfg.tol, &spec);
    bool all = rep.passed;
    for (const auto& p : rep.properties) all = all && p.passed;
    emit(io::verification_to_json(rep), cfg.out_path, out);
    return all ? 0 : 1;
}

int cmd_classify(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    io::Json j = io::parse_text(read_document(cfg.in_arg, in));
    EvaluatableMap m = j.is_array() ? map_from_transcript(io::transcript_from_json(j))
                                    : map_from_spec(io::family_from_json(j));
    try {
        ClassificationReport rep = classify(m, cfg.tol);
        emit(io::classification_to_json(rep), cfg.out_path, out);
        return 0;
    } catch (const Error& e) {
        std::string kind = e.kind();
        if (kind == "not_a_homomorphism" || kind == "unrecognized_multiplicative" ||
            kind == "inconsistent_probes") {
            io::Json doc;
            doc["error"] = kind;
            doc["message"] = e.what();
            emit(doc, cfg.out_path, out);
        }
        throw;
    }
}

int cmd_decompose(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    Herm2 a = io::matrix_from_json(io::parse_text(read_document(cfg.in_arg, in)));
    BDBDecomposition d = decompose_bdb(a);
    io::Json j;
    j["B"] = io::matrix_to_json(d.b);
    j["lambda1"] = d.lambda1;
    j["lambda2"] = d.lambda2;
    emit(j, cfg.out_path, out);
    return 0;
}

int cmd_involution(bool to_matrix, bool to_param, const CliConfig& cfg, std::istream& in,
                   std::ostream& out) {
    if (to_matrix == to_param)
        throw ParseError("exactly one of --to-matrix/--to-param is required");
    io::Json j = io::parse_text(read_document(cfg.in_arg, in));
    if (to_matrix) {
        Herm2 x = involution_from_param(io::involution_param_from_json(j));
        emit(io::matrix_to_json(x), cfg.out_path, out);
    } else {
        InvolutionParam p = involution_to_param(io::matrix_from_json(j));
        emit(io::involution_param_to_json(p), cfg.out_path, out);
    }
    return 0;
}

int cmd_fe_check(const std::string& grid, const CliConfig& cfg, std::istream& in,
                 std::ostream& out) {
    MultiplicativeModel gamma =
        io::mult_model_from_json(io::parse_text(read_document(cfg.in_arg, in)));
    double start = 0;
    double step = 0;
    double end = 0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream gs(grid);
    if (!(gs >> start >> c1 >> step >> c2 >> end) || c1 != ':' || c2 != ':' || step <= 0 ||
        end < start)
        throw ParseError("--grid must be start:step:end with step > 0 and end >= start");
    io::Json rows = io::Json::array();
    bool all_hold = true;
    int count = static_cast<int>(std::floor((end - start) / step + 0.5)) + 1;
    for (int i = 0; i < count; ++i) {
        double x = start + i * step;
        FeCheckResult r = fe_check(gamma, x, cfg.tol);
        io::Json row;
        row["x"] = x;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["holds"] = r.holds;
        rows.push_back(row);
        all_hold = all_hold && r.holds;
    }
    io::Json j;
    j["gamma"] = io::mult_model_to_json(gamma);
    j["rows"] = rows;
    j["all_hold"] = all_hold;
    emit(j, cfg.out_path, out);
    return 0;
}

int cmd_suite(const CliConfig& cfg, std::ostream& out) {
    const auto& suite = canonical_suite();
    io::Json members = io::Json::array();
    bool all_pass = true;
    for (std::size_t k = 0; k < suite.size(); ++k) {
        const FamilySpec& member = suite[k];
        EvaluatableMap m = map_from_spec(member);
        VerificationReport rep = verify_jtp(m, cfg.n_samples, cfg.seed, cfg.tol);
        io::Json entry;
        entry["index"] = static_cast<int>(k);
        entry["form"] = family_name(member);
        entry["max_residual"] = rep.max_residual;
        entry["verify_pass"] = rep.passed;
        io::Json cls;
        bool roundtrip = false;
        try {
            ClassificationReport crep = classify(m, cfg.tol);
            bool gauge = gauge_equivalent(member, crep.fitted, cfg.tol);
            roundtrip = gauge && crep.fit_residual <= cfg.tol;
            io::Json path = io::Json::array();
            for (const auto& s : crep.branch_path) path.push_back(s);
            cls["branch_path"] = path;
            cls["fit_residual"] = crep.fit_residual;
            cls["gauge_equivalent"] = gauge;
        } catch (const Error& e) {
            cls["error"] = std::string(e.kind());
        }
        entry["classify"] = cls;
        bool ok = rep.passed && roundtrip;
        entry["pass"] = ok;
        all_pass = all_pass && ok;
        members.push_back(entry);
    }
    io::Json j;
    j["seed"] = cfg.seed;
    j["n"] = cfg.n_samples;
    j["tol"] = cfg.tol;
    j["members"] = members;
    j["all_pass"] = all_pass;
    emit(j, cfg.out_path, out);
    return all_pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Canonical triple-product homomorphisms on 2x2 Hermitian matrices"};
    app.require_subcommand(1);

    CliConfig cfg;
    GenOptions gen;
    bool to_matrix = false;
    bool to_param = false;
    std::string grid = "0.1:0.1:10.0";

    auto add_common = [&](CLI::App* sub, bool with_sampling) {
        sub->add_option("--in", cfg.in_arg, "input document: path or inline JSON");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--tol", cfg.tol, "numerical tolerance");
        if (with_sampling) {
            sub->add_option("--seed", cfg.seed, "sampling seed");
            sub->add_option("--n", cfg.n_samples, "number of sampled pairs");
        }
    };

    CLI::App* sgen = app.add_subcommand("gen", "emit a canonical map spec");
    sgen->add_option("--form", gen.form, "family form: i, ii, iii or iv")->required();
    sgen->add_option("--sign", gen.sign, "overall sign (+1 or -1)");
    sgen->add_option("--u-file", gen.u_arg, "unitary document: path or inline JSON");
    sgen->add_option("--beta", gen.beta_arg, "multiplicative model document (form iv)");
    sgen->add_option("--tilde", gen.tilde, "form iv variant tag");
    sgen->add_option("--hom1", gen.hom1_arg, "first scalar hom document (form i)");
    sgen->add_option("--hom2", gen.hom2_arg, "second scalar hom document (form i)");
    add_common(sgen, false);

    CLI::App* seval = app.add_subcommand("eval", "apply a map spec to a matrix from stdin");
    add_common(seval, false);

    CLI::App* sverify = app.add_subcommand("verify", "check the triple-product law");
    add_common(sverify, true);

    CLI::App* sclassify = app.add_subcommand("classify", "fit a map back to canonical form");
    add_common(sclassify, false);

    CLI::App* sdecompose = app.add_subcommand("decompose", "involution eigendecomposition");
    add_common(sdecompose, false);

    CLI::App* sinvolution = app.add_subcommand("involution", "involution parameter conversion");
    sinvolution->add_flag("--to-matrix", to_matrix, "parameter document to matrix");
    sinvolution->add_flag("--to-param", to_param, "matrix document to parameter");
    add_common(sinvolution, false);

    CLI::App* sfe = app.add_subcommand("fe-check", "functional-equation grid check");
    sfe->add_option("--grid", grid, "grid start:step:end");
    add_common(sfe, false);

    CLI::App* ssuite = app.add_subcommand("suite", "verify and classify the canonical suite");
    add_common(ssuite, true);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("jtp");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cfg.tol <= 0) throw ParseError("--tol must be positive");
        if (cfg.n_samples < 1) throw ParseError("--n must be at least 1");
        if (sgen->parsed()) return cmd_gen(gen, cfg, in, out);
        if (seval->parsed()) return cmd_eval(cfg, in, out);
        if (sverify->parsed()) return cmd_verify(cfg, in, out);
        if (sclassify->parsed()) return cmd_classify(cfg, in, out);
        if (sdecompose->parsed()) return cmd_decompose(cfg, in, out);
        if (sinvolution->parsed()) return cmd_involution(to_matrix, to_param, cfg, in, out);
        if (sfe->parsed()) return cmd_fe_check(grid, cfg, in, out);
        if (ssuite->parsed()) return cmd_suite(cfg, out);
        err << "error: usage: no command given\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        std::string kind = e.kind();
        if (kind == "parse") return 2;
        if (kind == "not_a_homomorphism" || kind == "unrecognized_multiplicative" ||
            kind == "inconsistent_probes")
            return 4;
        return 3;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 3;
    }
}

} // namespace jtp
