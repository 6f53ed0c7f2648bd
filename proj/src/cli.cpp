#include "commalg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commalg/canonical.hpp"
#include "commalg/commutant.hpp"
#include "commalg/equivalence.hpp"
#include "commalg/gen.hpp"
#include "commalg/potter.hpp"
#include "commalg/rng.hpp"

namespace commalg {

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Matrix load_matrix(const std::string& path) { return parse_matrix(read_source(path)); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void emit_error(std::ostream& err, std::string_view kind, const std::string& message,
                std::optional<std::size_t> line = {}, std::optional<std::size_t> column = {}) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    if (line) e["line"] = *line;
    if (column) e["column"] = *column;
    err << Json{{"error", e}}.dump() << '\n';
}

[[noreturn]] void consistency_failure(const std::string& what) {
    std::cerr << "consistency check failed: " << what << '\n';
    std::abort();
}

CongruenceClass parse_class(const std::string& text) {
    if (text == "general") return CongruenceClass::general();
    if (text == "odd") return CongruenceClass::odd();
    if (text.rfind("q:", 0) == 0) {
        const std::string digits = text.substr(2);
        if (!digits.empty() && digits.size() < 6 &&
            std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return CongruenceClass::qclass(std::stoi(digits));
    }
    throw Error(ErrorKind::InvalidSpec, "class must be general, odd or q:N, got '" + text + "'");
}

std::pair<Matrix, Matrix> same_field_pair(Matrix a, Matrix b) {
    if (a.field() != b.field()) {
        if (a.field().is_rational()) a = a.promote(b.field().conductor);
        else if (b.field().is_rational()) b = b.promote(a.field().conductor);
    }
    require_same_field(a.field(), b.field());
    return {std::move(a), std::move(b)};
}

}  // namespace

Json analysis_report(const Matrix& a, std::optional<std::pair<int, int>> omega, bool with_basis) {
    require_square(a);
    const std::size_t n = a.rows();
    const StructureReport s = structure_report(a);
    const SubspaceBasis c = centralizer_basis(a);
    const SubspaceBasis cl = clifforder_basis(a);
    const SubspaceBasis c2 = double_centralizer_basis(a);
    const bool invertible = clifforder_has_invertible(a);

    if (s.is_balanced != invertible) consistency_failure("balanced flag differs from the clifforder criterion");
    if (s.is_balanced && !clifforder_invertible_witness(a).has_value())
        consistency_failure("balanced matrix but no invertible clifforder element was found");
    if (s.min_equals_char != (c.dim() == n)) consistency_failure("min = char disagrees with dim C(A) = n");
    if (c2.dim() != static_cast<std::size_t>(s.min_poly.degree()))
        consistency_failure("dim of the double centralizer differs from deg m_A");
    if (s.invariant_factors.empty() ? n != 0 : !(s.invariant_factors.back() == s.min_poly))
        consistency_failure("last invariant factor differs from the minimal polynomial");

    Json out;
    out["input"] = to_json(a);
    out["structure"] = to_json(s);
    Json dims;
    dims["centralizer"] = c.dim();
    dims["clifforder"] = cl.dim();
    dims["double_centralizer"] = c2.dim();
    out["dims"] = dims;
    Json flags;
    flags["balanced"] = s.is_balanced;
    flags["nilpotent"] = s.is_nilpotent;
    flags["min_eq_char"] = s.min_equals_char;
    flags["clifforder_has_invertible"] = invertible;
    out["flags"] = flags;
    if (with_basis) {
        out["bases"] = {{"centralizer", to_json(c, true)["basis"]},
                        {"clifforder", to_json(cl, true)["basis"]},
                        {"double_centralizer", to_json(c2, true)["basis"]}};
    }
    if (omega) {
        const OmegaSpec w(omega->first, omega->second);
        const SubspaceBasis co = omega_centralizer_basis(a, w);
        for (const auto& x : co.basis()) {
            const Matrix ca = into_cyclotomic(a, w.q);
            if (!(ca * x == w.omega() * (x * ca))) consistency_failure("omega-centralizer element fails AX = wXA");
        }
        Json o = to_json(co, true);
        Json section;
        section["q"] = w.q;
        section["k"] = w.k;
        section["dim"] = o["dim"];
        section["basis"] = o["basis"];
        out["omega"] = section;
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact commutant, clifforder and polynomial-equivalence computations", "commalg"};
    app.require_subcommand(1);

    std::string file_a, file_b;
    bool with_basis = false;
    int q = 0, k = 1;

    auto* analyze = app.add_subcommand("analyze", "Structure report, commutant dimensions and flags");
    analyze->add_option("file", file_a, "Matrix JSON file, or - for stdin")->required();
    analyze->add_option("--q", q, "Also report the omega-centralizer for omega = zeta_q^k");
    analyze->add_option("--k", k, "Which primitive root (default 1)");
    analyze->add_flag("--basis", with_basis, "Include the bases");

    auto* central = app.add_subcommand("centralizer", "Centralizer of a matrix");
    central->add_option("file", file_a)->required();
    central->add_flag("--basis", with_basis);

    auto* cliff = app.add_subcommand("clifforder", "Anti-commutant of a matrix");
    cliff->add_option("file", file_a)->required();
    cliff->add_flag("--basis", with_basis);

    auto* omega = app.add_subcommand("omega", "Omega-centralizer {X : AX = omega XA}");
    omega->add_option("file", file_a)->required();
    omega->add_option("--q", q)->required();
    omega->add_option("--k", k);
    omega->add_flag("--basis", with_basis);

    std::string cls_text = "general";
    auto* equiv = app.add_subcommand("equiv", "Certificate for B = f(A), A = g(B)");
    equiv->add_option("file_a", file_a)->required();
    equiv->add_option("file_b", file_b)->required();
    equiv->add_option("--class", cls_text, "general, odd or q:N");

    int samples = 20;
    std::uint64_t seed = 1;
    auto* potter = app.add_subcommand("potter", "Check (sA + tB)^q = s^q A^q + t^q B^q on random s, t");
    potter->add_option("file_a", file_a)->required();
    potter->add_option("file_b", file_b)->required();
    potter->add_option("--q", q)->required();
    potter->add_option("--k", k);
    potter->add_option("--samples", samples);
    potter->add_option("--seed", seed);

    std::string spec_text;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate a matrix from a JSON spec");
    gen->add_option("--spec", spec_text, "Inline JSON or a path to a JSON file")->required();
    gen->add_option("--seed", gen_seed);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "UsageError", e.what());
        return kExitInputError;
    }

    try {
        if (analyze->parsed()) {
            std::optional<std::pair<int, int>> w;
            if (q != 0) w = std::pair{q, k};
            emit(out, analysis_report(load_matrix(file_a), w, with_basis));
            return kExitOk;
        }
        if (central->parsed() || cliff->parsed()) {
            const Matrix a = load_matrix(file_a);
            emit(out, to_json(central->parsed() ? centralizer_basis(a) : clifforder_basis(a), with_basis));
            return kExitOk;
        }
        if (omega->parsed()) {
            const OmegaSpec w(q, k);
            Json j = to_json(omega_centralizer_basis(load_matrix(file_a), w), with_basis);
            j["q"] = w.q;
            j["k"] = w.k;
            emit(out, j);
            return kExitOk;
        }
        if (equiv->parsed()) {
            const CongruenceClass cls = parse_class(cls_text);
            const auto [a, b] = same_field_pair(load_matrix(file_a), load_matrix(file_b));
            if (auto cert = equivalence_certificate(a, b, cls)) {
                Json j = to_json(*cert);
                j["equivalent"] = true;
                emit(out, j);
                return kExitOk;
            }
            emit(out, Json{{"equivalent", false}});
            return kExitNegative;
        }
        if (potter->parsed()) {
            const OmegaSpec w(q, k);
            if (samples < 1) throw Error(ErrorKind::InvalidSpec, "--samples must be at least 1");
            QuasiPair pair{into_cyclotomic(load_matrix(file_a), w.q), into_cyclotomic(load_matrix(file_b), w.q), w};
            require_square(pair.a);
            require_same_shape(pair.a, pair.b);
            Json j;
            j["q"] = w.q;
            j["k"] = w.k;
            if (!omega_commutes(pair.a, pair.b, w)) {
                j["omega_commutes"] = false;
                j["holds"] = false;
                emit(out, j);
                return kExitNegative;
            }
            Rng rng(seed);
            int passed = 0;
            for (int i = 0; i < samples; ++i) {
                const Scalar s = Scalar::from_int(rng.uniform(-5, 5), FieldTag::rational());
                const Scalar t = Scalar::from_int(rng.uniform(-5, 5), FieldTag::rational());
                passed += potter_check(pair, s, t) ? 1 : 0;
            }
            j["omega_commutes"] = true;
            j["samples"] = samples;
            j["passed"] = passed;
            j["holds"] = passed == samples;
            emit(out, j);
            return passed == samples ? kExitOk : kExitNegative;
        }
        if (gen->parsed()) {
            const std::string text = !spec_text.empty() && spec_text.front() == '{' ? spec_text : read_source(spec_text);
            emit(out, to_json(generate(genspec_from_json(parse_json_text(text), gen_seed))));
            return kExitOk;
        }
    } catch (const ParseError& e) {
        emit_error(err, to_string(e.kind()), e.what(), e.line(), e.column());
        return kExitInputError;
    } catch (const Error& e) {
        emit_error(err, to_string(e.kind()), e.what());
        return kExitInputError;
    } catch (const IoFailure& e) {
        emit_error(err, "IoError", e.what());
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace commalg
