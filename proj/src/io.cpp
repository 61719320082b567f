#include "jtp/io.hpp"

#include <cstdio>

#include "jtp/errors.hpp"

namespace jtp::io {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_value(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                write_value(it.value(), out, indent, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                write_value(el, out, indent, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::string:
            out += nlohmann::json(j.get<std::string>()).dump();
            return;
        case Json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case Json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case Json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += "null";
            return;
    }
}

double require_number(const Json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Complex complex_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + " must be a [re, im] pair");
    return {require_number(j[0], what), require_number(j[1], what)};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

int require_sign(const Json& j, const char* what) {
    double v = require_number(j, what);
    if (v == 1.0) return +1;
    if (v == -1.0) return -1;
    throw ParseError(std::string(what) + " must be +1 or -1");
}

} // namespace

std::string dump_pinned(const Json& j, int indent) {
    std::string out;
    write_value(j, out, indent, 0);
    return out;
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

Json matrix_to_json(const Herm2& x) {
    Json j;
    j["a"] = x.a;
    j["b"] = complex_to_json(x.b);
    j["c"] = x.c;
    return j;
}

Herm2 matrix_from_json(const Json& j) {
    double a = require_number(require_field(j, "a"), "matrix entry 'a'");
    Complex b = complex_from_json(require_field(j, "b"), "matrix entry 'b'");
    double c = require_number(require_field(j, "c"), "matrix entry 'c'");
    return Herm2(a, b, c);
}

Json unitary_to_json(const Unitary2& u) {
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) row.push_back(complex_to_json(u.u.at(r, c)));
        rows.push_back(row);
    }
    Json j;
    j["rows"] = rows;
    return j;
}

Unitary2 unitary_from_json(const Json& j) {
    const Json& rows = require_field(j, "rows");
    if (!rows.is_array() || rows.size() != 2)
        throw ParseError("unitary 'rows' must be a 2x2 array");
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        const Json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 2)
            throw ParseError("unitary 'rows' must be a 2x2 array");
        for (int c = 0; c < 2; ++c)
            m.at(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], "unitary entry");
    }
    return Unitary2(m);
}

Json mult_model_to_json(const MultiplicativeModel& m) {
    Json j;
    switch (m.variant) {
        case MultVariant::Zero: j["variant"] = "zero"; break;
        case MultVariant::One: j["variant"] = "one"; break;
        case MultVariant::Indicator: j["variant"] = "indicator"; break;
        case MultVariant::Power: j["variant"] = "power"; break;
    }
    j["domain"] = m.domain == MultDomain::NonNegReals ? "nonneg" : "nonzero";
    if (m.variant == MultVariant::Power) {
        j["p"] = m.p;
        if (m.domain == MultDomain::NonZeroReals) j["neg_sign"] = m.neg_sign;
    }
    return j;
}

MultiplicativeModel mult_model_from_json(const Json& j) {
    const Json& vj = require_field(j, "variant");
    if (!vj.is_string()) throw ParseError("'variant' must be a string");
    std::string v = vj.get<std::string>();
    const Json& dj = require_field(j, "domain");
    if (!dj.is_string()) throw ParseError("'domain' must be a string");
    std::string d = dj.get<std::string>();
    MultDomain domain;
    if (d == "nonneg") {
        domain = MultDomain::NonNegReals;
    } else if (d == "nonzero") {
        domain = MultDomain::NonZeroReals;
    } else {
        throw ParseError("'domain' must be 'nonneg' or 'nonzero'");
    }
    if (v == "zero") return MultiplicativeModel::zero(domain);
    if (v == "one") return MultiplicativeModel::one(domain);
    if (v == "indicator") return MultiplicativeModel::indicator(domain);
    if (v != "power") throw ParseError("unknown multiplicative variant '" + v + "'");
    double p = require_number(require_field(j, "p"), "'p'");
    int neg_sign = +1;
    if (j.contains("neg_sign")) {
        if (domain == MultDomain::NonNegReals)
            throw ParseError("'neg_sign' is only meaningful on the nonzero domain");
        neg_sign = require_sign(j.at("neg_sign"), "'neg_sign'");
    }
    return MultiplicativeModel::power(domain, p, neg_sign);
}

Json eta_to_json(const EtaTable& t) {
    Json j;
    j["eta0"] = t(0);
    j["eta1"] = t(1);
    j["eta2"] = t(2);
    return j;
}

EtaTable eta_from_json(const Json& j) {
    int e0 = require_sign(require_field(j, "eta0"), "'eta0'");
    int e1 = require_sign(require_field(j, "eta1"), "'eta1'");
    int e2 = require_sign(require_field(j, "eta2"), "'eta2'");
    return EtaTable(e0, e1, e2);
}

Json scalar_hom_to_json(const ScalarJtpHom& h) {
    Json j;
    j["psi"] = mult_model_to_json(h.psi);
    j["eta"] = eta_to_json(h.eta_table);
    return j;
}

ScalarJtpHom scalar_hom_from_json(const Json& j) {
    MultiplicativeModel psi = mult_model_from_json(require_field(j, "psi"));
    EtaTable eta = eta_from_json(require_field(j, "eta"));
    return ScalarJtpHom(psi, eta);
}

namespace {

const char* tilde_to_string(TildeVariant t) {
    switch (t) {
        case TildeVariant::A: return "A";
        case TildeVariant::ConjA: return "conjA";
        case TildeVariant::InvA: return "invA";
        case TildeVariant::ConjInvA: return "conjInvA";
        case TildeVariant::EtaA: return "etaA";
        case TildeVariant::EtaConjA: return "etaConjA";
        case TildeVariant::EtaInvA: return "etaInvA";
        case TildeVariant::EtaConjInvA: return "etaConjInvA";
    }
    return "A";
}

TildeVariant tilde_from_string(const std::string& s) {
    if (s == "A") return TildeVariant::A;
    if (s == "conjA") return TildeVariant::ConjA;
    if (s == "invA") return TildeVariant::InvA;
    if (s == "conjInvA") return TildeVariant::ConjInvA;
    if (s == "etaA") return TildeVariant::EtaA;
    if (s == "etaConjA") return TildeVariant::EtaConjA;
    if (s == "etaInvA") return TildeVariant::EtaInvA;
    if (s == "etaConjInvA") return TildeVariant::EtaConjInvA;
    throw ParseError("unknown tilde variant '" + s + "'");
}

} // namespace

Json family_to_json(const FamilySpec& s) {
    Json j;
    if (const auto* f1 = std::get_if<FormI>(&s)) {
        j["form"] = "i";
        j["U"] = unitary_to_json(f1->u);
        j["hom1"] = scalar_hom_to_json(f1->hom1);
        j["hom2"] = scalar_hom_to_json(f1->hom2);
        return j;
    }
    if (const auto* f2 = std::get_if<FormII>(&s)) {
        j["form"] = "ii";
        j["sign"] = f2->sign;
        j["U"] = unitary_to_json(f2->u);
        return j;
    }
    if (const auto* f3 = std::get_if<FormIII>(&s)) {
        j["form"] = "iii";
        j["sign"] = f3->sign;
        j["U"] = unitary_to_json(f3->u);
        return j;
    }
    const auto& f4 = std::get<FormIV>(s);
    j["form"] = "iv";
    j["sign"] = f4.sign;
    j["U"] = unitary_to_json(f4.u);
    j["beta"] = mult_model_to_json(f4.beta);
    j["tilde"] = tilde_to_string(f4.tilde);
    return j;
}

FamilySpec family_from_json(const Json& j) {
    const Json& fj = require_field(j, "form");
    if (!fj.is_string()) throw ParseError("'form' must be a string");
    std::string form = fj.get<std::string>();
    if (form == "i") {
        Unitary2 u = unitary_from_json(require_field(j, "U"));
        ScalarJtpHom h1 = scalar_hom_from_json(require_field(j, "hom1"));
        ScalarJtpHom h2 = scalar_hom_from_json(require_field(j, "hom2"));
        return make_form_i(u, h1, h2);
    }
    if (form == "ii" || form == "iii") {
        int sign = require_sign(require_field(j, "sign"), "'sign'");
        Unitary2 u = unitary_from_json(require_field(j, "U"));
        return form == "ii" ? FamilySpec(make_form_ii(sign, u))
                            : FamilySpec(make_form_iii(sign, u));
    }
    if (form == "iv") {
        int sign = require_sign(require_field(j, "sign"), "'sign'");
        Unitary2 u = unitary_from_json(require_field(j, "U"));
        MultiplicativeModel beta = mult_model_from_json(require_field(j, "beta"));
        const Json& tj = require_field(j, "tilde");
        if (!tj.is_string()) throw ParseError("'tilde' must be a string");
        return make_form_iv(sign, u, beta, tilde_from_string(tj.get<std::string>()));
    }
    throw ParseError("unknown form '" + form + "'");
}

Json transcript_to_json(const std::vector<TranscriptEntry>& entries) {
    Json arr = Json::array();
    for (const auto& e : entries) {
        Json row;
        row["in"] = matrix_to_json(e.in);
        row["out"] = matrix_to_json(e.out);
        arr.push_back(row);
    }
    return arr;
}

std::vector<TranscriptEntry> transcript_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("transcript must be an array of {in, out} rows");
    std::vector<TranscriptEntry> out;
    out.reserve(j.size());
    for (const auto& row : j) {
        TranscriptEntry e{matrix_from_json(require_field(row, "in")),
                          matrix_from_json(require_field(row, "out"))};
        out.push_back(e);
    }
    return out;
}

Json involution_param_to_json(const InvolutionParam& p) {
    Json j;
    if (p.kind == InvolutionParam::Kind::General) {
        j["kind"] = "general";
        j["branch"] = p.branch;
        j["a"] = complex_to_json(p.a);
    } else {
        j["kind"] = "scalar";
        j["sign"] = p.kind == InvolutionParam::Kind::ScalarPlus ? +1 : -1;
    }
    return j;
}

InvolutionParam involution_param_from_json(const Json& j) {
    const Json& kj = require_field(j, "kind");
    if (!kj.is_string()) throw ParseError("'kind' must be a string");
    std::string kind = kj.get<std::string>();
    if (kind == "scalar") {
        int sign = require_sign(require_field(j, "sign"), "'sign'");
        return InvolutionParam::scalar(sign);
    }
    if (kind == "general") {
        int branch = require_sign(require_field(j, "branch"), "'branch'");
        Complex a = complex_from_json(require_field(j, "a"), "'a'");
        return InvolutionParam::general(branch, a);
    }
    throw ParseError("unknown involution kind '" + kind + "'");
}

Json verification_to_json(const VerificationReport& rep) {
    Json j;
    j["note"] = "sampling-based check: the law and its consequences are tested on "
                "seeded samples, not proven; uniqueness is approximated by negative "
                "tests and classification roundtrips";
    j["n"] = rep.n_samples;
    j["max_residual"] = rep.max_residual;
    Json w;
    w["A"] = matrix_to_json(rep.witness_a);
    w["B"] = matrix_to_json(rep.witness_b);
    j["witness"] = w;
    j["properties"] = properties_to_json(rep.properties);
    return j;
}

Json properties_to_json(const std::vector<PropertyResult>& props) {
    Json arr = Json::array();
    for (const auto& p : props) {
        Json row;
        row["name"] = p.name;
        row["pass"] = p.passed;
        row["deviation"] = p.worst;
        arr.push_back(row);
    }
    return arr;
}

Json classification_to_json(const ClassificationReport& rep) {
    Json j;
    Json path = Json::array();
    for (const auto& step : rep.branch_path) path.push_back(step);
    j["branch_path"] = path;
    j["fitted"] = family_to_json(rep.fitted);
    j["fit_residual"] = rep.fit_residual;
    j["gauge_note"] = rep.gauge_note;
    return j;
}

} // namespace jtp::io
