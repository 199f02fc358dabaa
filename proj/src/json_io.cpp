#include "torusbundle/json_io.hpp"

#include "torusbundle/error.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace torusbundle {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) { throw MalformedInputError(what); }

const json& require_field(const json& j, const char* key, const char* ctx) {
    if (!j.is_object() || !j.contains(key))
        malformed(std::string(ctx) + " is missing required field \"" + key + "\"");
    return j.at(key);
}

int require_dim(const json& j, const char* key, const char* ctx) {
    const json& f = require_field(j, key, ctx);
    if (!f.is_number_integer()) malformed(std::string(ctx) + "." + key + " must be an integer");
    const long long v = f.get<long long>();
    if (v < 1 || v > 1000) malformed(std::string(ctx) + "." + key + " is out of range");
    return static_cast<int>(v);
}

Int integer_entry(const json& e, const char* ctx) {
    if (e.is_number_unsigned()) return Int(e.get<unsigned long long>());
    if (e.is_number_integer()) return Int(e.get<long long>());
    if (e.is_string()) {
        Rational r = rational_from_string(e.get<std::string>());
        if (!is_integer(r)) malformed(std::string(ctx) + ": entry is not an integer");
        return numerator(r);
    }
    malformed(std::string(ctx) + ": entries must be integers or integer strings");
}

GaussianRational scalar_entry(const json& e, const char* ctx) {
    if (e.is_string()) return GaussianRational::from_string(e.get<std::string>());
    if (e.is_number_unsigned()) return GaussianRational(Rational(Int(e.get<unsigned long long>())));
    if (e.is_number_integer()) return GaussianRational(Rational(e.get<long long>()));
    malformed(std::string(ctx) + ": entries must be scalar strings or integers");
}

template <typename EntryParser>
ExactMatrix matrix_entry(const json& rows, const char* ctx, EntryParser parse) {
    if (!rows.is_array() || rows.empty()) malformed(std::string(ctx) + " must be a nonempty array of rows");
    const std::size_t ncols = rows.at(0).is_array() ? rows.at(0).size() : 0;
    if (ncols == 0) malformed(std::string(ctx) + " rows must be nonempty arrays");
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(ncols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows.at(r);
        if (!row.is_array() || row.size() != ncols) malformed(std::string(ctx) + " rows must have equal length");
        for (std::size_t c = 0; c < ncols; ++c)
            m(static_cast<int>(r), static_cast<int>(c)) = parse(row.at(c), ctx);
    }
    return m;
}

PeriodSubspace subspace_entry(const json& j, const char* ctx, int ambient, int dim) {
    ExactMatrix basis = matrix_entry(require_field(j, "basis", ctx), ctx, scalar_entry);
    if (basis.rows() != ambient || basis.cols() != dim) {
        std::ostringstream msg;
        msg << ctx << ".basis must be " << ambient << " x " << dim;
        malformed(msg.str());
    }
    return validate_subspace(basis);
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        malformed("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

// Integers that fit a JSON number are written as numbers, the rest as
// strings; readers accept both.
ojson integer_out(const Int& value) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (value >= lo && value <= hi) return ojson(value.convert_to<long long>());
    return ojson(value.str());
}

ojson matrix_of_integers(const ExactMatrix& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(integer_out(numerator(m(r, c).re())));
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson matrix_of_scalars(const ExactMatrix& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
ojson opt_out(const std::optional<T>& o) {
    if (!o) return ojson(nullptr);
    return ojson(*o);
}

template <typename T>
std::optional<T> opt_in(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

ojson cohomology_obj(const CohomologyReport& c) {
    return ojson{{"h0_omega1", c.h0_omega1},
                 {"h0_closed_coker", c.h0_closed_coker},
                 {"h1_O", c.h1_o},
                 {"h2_O", c.h2_o},
                 {"E3_02", c.e3_02},
                 {"E3_20", c.e3_20},
                 {"E3_11", c.e3_11},
                 {"parallelizable", c.parallelizable}};
}

ojson deformation_obj(const DeformationReport& f) {
    ojson def;
    def["G_rank"] = opt_out(f.g_rank);
    def["tangent_dim_TB"] = opt_out(f.tangent_dim_tb);
    def["tangent_dim_complete"] = opt_out(f.tangent_dim_complete);
    def["smooth"] = opt_out(f.smooth);
    def["ks_surjective_case"] = f.ks_case ? ojson(to_string(*f.ks_case)) : ojson(nullptr);
    if (f.ks_log) {
        def["ks_cases_holding"] = ojson{{"i", (*f.ks_log)[0]},
                                        {"ii", (*f.ks_log)[1]},
                                        {"iii", (*f.ks_log)[2]},
                                        {"iv", (*f.ks_log)[3]}};
    } else {
        def["ks_cases_holding"] = nullptr;
    }
    def["not_kaehler"] = f.not_kaehler;
    return def;
}

ojson pencil_obj(const PfaffianPencilReport& p) {
    ojson coeffs = ojson::array();
    for (const Rational& c : p.coefficients) coeffs.push_back(rational_to_string(c));
    return ojson{{"form", p.form.to_string({"mu1", "mu2"})},
                 {"pf_coefficients", std::move(coeffs)},
                 {"discriminant", rational_to_string(p.discriminant)},
                 {"real_point_verdict", to_string(p.verdict)}};
}

} // namespace

ProblemInstance parse_instance(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object()) malformed("instance document must be a JSON object");

    const json& a = require_field(j, "A", "instance");
    const int m = require_dim(a, "m", "A");
    const int d = require_dim(a, "d", "A");
    const json& comps = require_field(a, "components", "A");
    if (!comps.is_array() || comps.size() != static_cast<std::size_t>(2 * d))
        malformed("A.components must be an array of 2d matrices");
    std::vector<ExactMatrix> components;
    components.reserve(comps.size());
    for (const json& c : comps)
        components.push_back(matrix_entry(c, "A.components", [](const json& e, const char* ctx) {
            return GaussianRational(Rational(integer_entry(e, ctx)));
        }));

    ProblemInstance inst{validate_form(m, d, std::move(components)), std::nullopt, std::nullopt};
    if (j.contains("V") && !j.at("V").is_null()) inst.v = subspace_entry(j.at("V"), "V", 2 * m, m);
    if (j.contains("U") && !j.at("U").is_null()) inst.u = subspace_entry(j.at("U"), "U", 2 * d, d);
    return inst;
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) malformed("cannot read instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string instance_to_json(const ProblemInstance& inst) {
    ojson out;
    ojson a;
    a["m"] = inst.form.m();
    a["d"] = inst.form.d();
    ojson comps = ojson::array();
    for (const ExactMatrix& c : inst.form.components()) comps.push_back(matrix_of_integers(c));
    a["components"] = std::move(comps);
    out["A"] = std::move(a);
    if (inst.v) out["V"] = ojson{{"basis", matrix_of_scalars(inst.v->basis())}};
    if (inst.u) out["U"] = ojson{{"basis", matrix_of_scalars(inst.u->basis())}};
    return out.dump(2) + "\n";
}

std::string report_to_json(const ClassificationReport& rep) {
    ojson out;
    out["m"] = rep.m;
    out["d"] = rep.d;
    out["kernel_dim"] = rep.kernel_dim;
    out["image_dim"] = rep.image_dim;
    out["riemann_ok"] = opt_out(rep.riemann_ok);

    out["cohomology"] = rep.cohomology ? cohomology_obj(*rep.cohomology) : ojson(nullptr);
    out["deformation"] = deformation_obj(rep.deformation);
    out["pencil"] = rep.pencil ? pencil_obj(*rep.pencil) : ojson(nullptr);

    out["main_theorem_verdict"] = to_string(rep.main_theorem_verdict);
    out["warnings"] = rep.warnings;
    return out.dump(2) + "\n";
}

std::string pencil_to_json(const PfaffianPencilReport& pencil) {
    ojson out;
    out["pencil"] = pencil_obj(pencil);
    return out.dump(2) + "\n";
}

std::string invariants_to_json(const CohomologyReport& cohomology, const DeformationReport& deformation) {
    ojson out;
    out["cohomology"] = cohomology_obj(cohomology);
    out["deformation"] = deformation_obj(deformation);
    return out.dump(2) + "\n";
}

ClassificationReport report_from_json(const std::string& text) {
    const json j = parse_document(text);
    try {
        ClassificationReport rep;
        rep.m = j.at("m").get<int>();
        rep.d = j.at("d").get<int>();
        rep.kernel_dim = j.at("kernel_dim").get<int>();
        rep.image_dim = j.at("image_dim").get<int>();
        rep.riemann_ok = opt_in<bool>(j, "riemann_ok");

        if (j.contains("cohomology") && !j.at("cohomology").is_null()) {
            const json& c = j.at("cohomology");
            CohomologyReport co;
            co.h0_omega1 = c.at("h0_omega1").get<int>();
            co.h0_closed_coker = c.at("h0_closed_coker").get<int>();
            co.h1_o = c.at("h1_O").get<int>();
            co.h2_o = c.at("h2_O").get<int>();
            co.e3_02 = c.at("E3_02").get<int>();
            co.e3_20 = c.at("E3_20").get<int>();
            co.e3_11 = c.at("E3_11").get<int>();
            co.parallelizable = c.at("parallelizable").get<bool>();
            rep.cohomology = co;
        }

        const json& def = j.at("deformation");
        rep.deformation.g_rank = opt_in<int>(def, "G_rank");
        rep.deformation.tangent_dim_tb = opt_in<int>(def, "tangent_dim_TB");
        rep.deformation.tangent_dim_complete = opt_in<int>(def, "tangent_dim_complete");
        rep.deformation.smooth = opt_in<bool>(def, "smooth");
        if (auto text_case = opt_in<std::string>(def, "ks_surjective_case"))
            rep.deformation.ks_case = ks_case_from_string(*text_case);
        if (def.contains("ks_cases_holding") && !def.at("ks_cases_holding").is_null()) {
            const json& log = def.at("ks_cases_holding");
            rep.deformation.ks_log = std::array<bool, 4>{log.at("i").get<bool>(), log.at("ii").get<bool>(),
                                                         log.at("iii").get<bool>(), log.at("iv").get<bool>()};
        }
        rep.deformation.not_kaehler = def.at("not_kaehler").get<bool>();

        if (j.contains("pencil") && !j.at("pencil").is_null()) {
            const json& p = j.at("pencil");
            PfaffianPencilReport pen;
            const json& coeffs = p.at("pf_coefficients");
            if (!coeffs.is_array() || coeffs.size() != 3) malformed("pencil.pf_coefficients must have 3 entries");
            for (const json& c : coeffs) pen.coefficients.push_back(rational_from_string(c.get<std::string>()));
            pen.discriminant = rational_from_string(p.at("discriminant").get<std::string>());
            pen.verdict = pencil_verdict_from_string(p.at("real_point_verdict").get<std::string>());
            pen.form = MultiPoly::monomial(2, {2, 0}, GaussianRational(pen.coefficients[0])) +
                       MultiPoly::monomial(2, {1, 1}, GaussianRational(pen.coefficients[1])) +
                       MultiPoly::monomial(2, {0, 2}, GaussianRational(pen.coefficients[2]));
            rep.pencil = std::move(pen);
        }

        rep.main_theorem_verdict = main_verdict_from_string(j.at("main_theorem_verdict").get<std::string>());
        rep.warnings = j.at("warnings").get<std::vector<std::string>>();
        return rep;
    } catch (const json::exception& e) {
        malformed(std::string("report document malformed: ") + e.what());
    }
}

} // namespace torusbundle
