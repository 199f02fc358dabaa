#include "torusbundle/render.hpp"

#include "torusbundle/error.hpp"
#include "torusbundle/json_io.hpp"

#include <sstream>

namespace torusbundle {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

const char* true_false(bool b) { return b ? "true" : "false"; }

void append_pencil(std::ostream& out, const PfaffianPencilReport& p) {
    out << "pfaffian pencil: " << p.form.to_string({"mu1", "mu2"}) << "\n";
    out << "pencil coefficients: [" << rational_to_string(p.coefficients[0]) << ", "
        << rational_to_string(p.coefficients[1]) << ", " << rational_to_string(p.coefficients[2]) << "]\n";
    out << "pencil discriminant: " << rational_to_string(p.discriminant) << "\n";
    out << "pencil verdict: " << to_string(p.verdict) << "\n";
}

void append_cohomology(std::ostream& out, const CohomologyReport& c) {
    out << "parallelizable: " << true_false(c.parallelizable) << "\n";
    out << "h^0(Omega^1): " << c.h0_omega1 << "\n";
    out << "h^0 closed cokernel: " << c.h0_closed_coker << "\n";
    out << "h^1(O): " << c.h1_o << "\n";
    out << "h^2(O): " << c.h2_o << " (E3 terms " << c.e3_02 << " + " << c.e3_20 << " + " << c.e3_11 << ")\n";
}

void append_deformation(std::ostream& out, const DeformationReport& f) {
    if (f.g_rank) {
        out << "G rank: " << *f.g_rank << "\n";
        out << "tangent dim (base): " << *f.tangent_dim_tb << "\n";
        out << "tangent dim (complete family): " << *f.tangent_dim_complete << "\n";
        out << "smooth: " << true_false(*f.smooth) << "\n";
        out << "surjectivity case: " << to_string(*f.ks_case) << " (holding:";
        const char* names[] = {"i", "ii", "iii", "iv"};
        bool any = false;
        for (std::size_t i = 0; i < 4; ++i)
            if ((*f.ks_log)[i]) {
                out << " " << names[i];
                any = true;
            }
        if (!any) out << " none";
        out << ")\n";
    }
    out << "not kaehler: " << true_false(f.not_kaehler) << "\n";
}

} // namespace

RenderFormat render_format_from_string(const std::string& text) {
    if (text == "json") return RenderFormat::Json;
    if (text == "text") return RenderFormat::Text;
    throw MalformedInputError("unknown format: " + text + " (expected json or text)");
}

std::string render_report(const ClassificationReport& rep, RenderFormat format) {
    return format == RenderFormat::Json ? report_to_json(rep) : render_report_text(rep);
}

std::string render_pencil_text(const PfaffianPencilReport& pencil) {
    std::ostringstream out;
    append_pencil(out, pencil);
    return out.str();
}

std::string render_invariants_text(const CohomologyReport& cohomology, const DeformationReport& deformation) {
    std::ostringstream out;
    append_cohomology(out, cohomology);
    append_deformation(out, deformation);
    return out.str();
}

std::string render_report_text(const ClassificationReport& rep) {
    std::ostringstream out;
    out << "instance: m=" << rep.m << ", d=" << rep.d << "\n";
    for (const std::string& w : rep.warnings) out << "warning: " << w << "\n";
    out << "kernel of form: dim " << rep.kernel_dim << "\n";
    out << "image of form: dim " << rep.image_dim << "\n";

    if (rep.pencil) {
        append_pencil(out, *rep.pencil);
    } else {
        out << "pfaffian pencil: not available (requires m=2, d=1)\n";
    }

    if (!rep.riemann_ok) {
        out << "riemann relation: not evaluated (no period data)\n";
    } else {
        out << "riemann relation: " << (*rep.riemann_ok ? "holds" : "fails") << "\n";
    }

    if (rep.cohomology) append_cohomology(out, *rep.cohomology);
    append_deformation(out, rep.deformation);

    out << "main theorem conditions:\n";
    out << "  size (m, d) = (2, 1): " << yes_no(rep.m == 2 && rep.d == 1) << "\n";
    out << "  nonzero class: " << yes_no(rep.deformation.not_kaehler) << "\n";
    out << "  trivial kernel: " << yes_no(rep.kernel_dim == 0) << "\n";
    out << "  image dimension 2: " << yes_no(rep.image_dim == 2) << "\n";
    if (rep.pencil) {
        out << "  pencil meets real points: " << yes_no(rep.pencil->verdict == PencilVerdict::RealPoint)
            << "\n";
    } else {
        out << "  pencil meets real points: unavailable\n";
    }
    out << "main theorem verdict: " << to_string(rep.main_theorem_verdict) << "\n";
    return out.str();
}

} // namespace torusbundle
