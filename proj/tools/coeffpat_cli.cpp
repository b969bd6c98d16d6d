#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "coeffpat/asympt.hpp"
#include "coeffpat/blocks.hpp"
#include "coeffpat/error.hpp"
#include "coeffpat/genfun.hpp"
#include "coeffpat/polytext.hpp"
#include "coeffpat/render.hpp"
#include "coeffpat/willson.hpp"
#include "json.hpp"

using namespace coeffpat;
using Json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string poly = "1+x";
    std::uint32_t prime = 2;
    std::string out = "-";
    std::string format;
};

void add_common(CLI::App* cmd, Common& c, bool withPoly, const std::string& formats, const std::string& defFormat) {
    if (withPoly) cmd->add_option("--poly", c.poly, "polynomial, e.g. 1+x+x^2 or 1,1,1")->capture_default_str();
    cmd->add_option("--prime", c.prime, "prime modulus")->capture_default_str();
    cmd->add_option("--out", c.out, "output path (- for stdout)")->capture_default_str();
    c.format = defFormat;
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(CLI::detail::split(formats, ',')))->capture_default_str();
}

void emit(const Common& c, const std::string& text) {
    if (c.out == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    const std::filesystem::path target(c.out);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string());
        f << text;
        f.flush();
        if (!f) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move output into place: " + ec.message());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Family family_of(const std::string& name, std::uint32_t p) {
    if (name == "1px") return Family::one_plus_x(p);
    if (name == "1xx2") {
        if (p != 2) throw ParseError("family 1xx2 is defined for --prime 2 only");
        return Family::one_plus_x_plus_x2_mod2();
    }
    throw ParseError("unknown family '" + name + "' (expected 1px or 1xx2)");
}

std::string rule_text(const RecursionSpec& rec, std::size_t k) {
    std::string s;
    for (std::size_t j = 0; j < rec.coeffs[k].size(); ++j) {
        if (j) s += ' ';
        s += rec.coeffs[k][j].get_str();
    }
    return s;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

// ---- blocks

struct BlocksArgs {
    Common c;
    std::size_t n = 10;
    std::string method = "closure";
    bool list = false;
};

std::string run_blocks(const BlocksArgs& a) {
    const Prime p(a.c.prime);
    const FpPoly f = parse_poly(a.c.poly, p);
    if (a.list) {
        const BlockSet s = a.method == "scan" ? scan_accessible(f, a.n, std::uint64_t{1} << 12) : closure_accessible(f, a.n);
        if (a.c.format == "json") {
            Json j = Json::array();
            for (const auto& b : s.members()) j.push_back({{"block", block_text(b, p)}});
            return dump(j);
        }
        return "block\n" + s.serialize();
    }
    std::vector<BigInt> values;
    if (a.method == "recursion") {
        values = recursion_prefix(infer_recursion(f), a.n);
    } else {
        const auto m = a.method == "scan" ? LineComplexityMethod::Doubling : LineComplexityMethod::Closure;
        values = line_complexity_profile(f, a.n, m);
    }
    if (a.c.format == "json") {
        Json j = Json::array();
        for (std::size_t i = 0; i < values.size(); ++i) j.push_back({{"n", i}, {"a_n", values[i].get_str()}});
        return dump(j);
    }
    return series_csv(SeriesCoeffs{values});
}

// ---- series

struct SeriesArgs {
    Common c;
    std::string family = "1px";
    std::size_t terms = 64;
};

std::string run_series(const SeriesArgs& a) {
    if (a.terms == 0) throw ParseError("--terms must be positive");
    const Family fam = family_of(a.family, a.c.prime);
    const SeriesCoeffs s = fam.kind == Family::Kind::OnePlusX ? series_1px(fam.p, a.terms - 1) : series_1xx2(a.terms - 1);
    if (a.c.format == "json") {
        Json j = Json::array();
        for (std::size_t i = 0; i < s.size(); ++i) j.push_back({{"n", i}, {"a_n", s[i].get_str()}});
        return dump(j);
    }
    return series_csv(s);
}

// ---- limits

struct LimitsArgs {
    Common c;
    std::string family = "1px";
    std::string what = "table";
    std::uint32_t k = 12;
    std::uint32_t samples = 16;
};

std::string run_limits(const LimitsArgs& a) {
    const Family fam = family_of(a.family, a.c.prime);
    const bool json = a.c.format == "json";
    if (a.what == "pieces") {
        const PiecewiseQuadratic L = limit_function(fam);
        Json j = Json::array();
        std::string csv = "lo,hi,A,B,C\n";
        for (const auto& q : L.pieces()) {
            j.push_back({{"lo", rational_text(q.lo)}, {"hi", rational_text(q.hi)}, {"A", rational_text(q.A)},
                         {"B", rational_text(q.B)}, {"C", rational_text(q.C)}});
            csv += rational_text(q.lo) + "," + rational_text(q.hi) + "," + rational_text(q.A) + "," +
                   rational_text(q.B) + "," + rational_text(q.C) + "\n";
        }
        return json ? dump(j) : csv;
    }
    if (a.what == "extrema") {
        const ExtremaResult e = extrema(fam);
        Json j{{"family", fam.name()}, {"inf", rational_text(e.inf)}, {"arg_inf", rational_text(e.argInf)},
               {"sup", rational_text(e.sup)}, {"arg_sup", rational_text(e.argSup)}};
        if (json) return dump(j);
        return "family,inf,arg_inf,sup,arg_sup\n" + fam.name() + "," + rational_text(e.inf) + "," +
               rational_text(e.argInf) + "," + rational_text(e.sup) + "," + rational_text(e.argSup) + "\n";
    }
    if (a.samples == 0 || a.k == 0) throw ParseError("--samples and --k must be positive");
    const auto rows = oscillation_table(family_recursion(fam), a.samples, a.k);
    if (!json) return oscillation_csv(rows);
    Json j = Json::array();
    for (const auto& r : rows) {
        j.push_back({{"logn", format_g12(r.logn)}, {"ratio", format_g12(r.ratio)}, {"n", r.n.get_str()}, {"a_n", r.a.get_str()}});
    }
    return dump(j);
}

// ---- willson / survey

struct WillsonArgs {
    Common c;
    std::uint64_t workCap = 2'000'000;
    bool exact = false;
};

std::string run_willson(const WillsonArgs& a) {
    if (a.c.prime != 2) throw ParseError("willson works over F2 only (--prime 2)");
    const FpPoly f = parse_poly(a.c.poly, Prime(2));
    const TransferSystem sys = trim(build_transfer(f));
    const SpectralResult s = minpoly_of_lambda(perron(sys), a.workCap);
    if (a.exact && !s.degree) throw ComputationError("minimal polynomial PENDING (work cap " + std::to_string(a.workCap) + ")");
    const bool boundOk = s.lambda <= eigen_bound(static_cast<std::size_t>(f.degree())) + 1e-12;
    char lam[64], dim[64];
    std::snprintf(lam, sizeof lam, "%.6f", s.lambda);
    std::snprintf(dim, sizeof dim, "%.6f", s.dimension);
    const std::string degree = s.degree ? std::to_string(*s.degree) : "PENDING";
    const std::string minpoly = s.minpoly ? zpoly::to_string(*s.minpoly) : "PENDING";
    if (a.c.format == "json") {
        return dump(Json{{"poly", format_poly(f)}, {"states", sys.size()}, {"lambda", lam}, {"degree", degree},
                         {"dimension", dim}, {"bound_ok", boundOk}, {"minpoly", minpoly}});
    }
    return std::string("poly\tstates\tlambda\tdegree\tdimension\tbound_ok\tminpoly\n") + format_poly(f) + "\t" +
           std::to_string(sys.size()) + "\t" + lam + "\t" + degree + "\t" + dim + "\t" + (boundOk ? "true" : "false") +
           "\t" + minpoly + "\n";
}

struct SurveyArgs {
    Common c;
    std::size_t maxDeg = 6;
    std::size_t K = 10;
    std::uint64_t workCap = 2'000'000;
    bool exact = false;
};

std::string run_survey(const SurveyArgs& a) {
    const SurveyResult s = survey(a.maxDeg, a.K, a.workCap);
    for (const auto& r : s.rows) {
        if (!r.countsOk) throw ComputationError("count identity failed for " + format_poly(r.poly));
        if (a.exact && !r.spectrum.degree) throw ComputationError("PENDING minimal polynomial for " + format_poly(r.poly));
    }
    if (a.c.format != "json") return survey_tsv(s);
    Json j = Json::array();
    char buf[64];
    for (const auto& r : s.rows) {
        Json row{{"poly", format_poly(r.poly)}};
        std::snprintf(buf, sizeof buf, "%.6f", r.spectrum.lambda);
        row["lambda"] = buf;
        row["degree"] = r.spectrum.degree ? std::to_string(*r.spectrum.degree) : "PENDING";
        std::snprintf(buf, sizeof buf, "%.6f", r.spectrum.dimension);
        row["dimension"] = buf;
        row["bound_ok"] = r.boundOk;
        j.push_back(row);
    }
    return dump(j);
}

// ---- infer

struct InferArgs {
    Common c;
    std::size_t window = 0;
};

std::string run_infer(const InferArgs& a) {
    const FpPoly f = parse_poly(a.c.poly, Prime(a.c.prime));
    const RecursionSpec rec = infer_recursion(f, a.window);
    if (a.c.format == "json") {
        Json j{{"p", rec.p}, {"constant", rec.constant.get_str()}, {"threshold", rec.threshold}};
        Json rows = Json::array();
        for (const auto& r : rec.coeffs) {
            Json row = Json::array();
            for (const auto& c : r) row.push_back(c.get_str());
            rows.push_back(row);
        }
        j["coeffs"] = rows;
        Json init = Json::array();
        for (const auto& v : rec.initials) init.push_back(v.get_str());
        j["initials"] = init;
        return dump(j);
    }
    std::string out = "k,coeffs,constant,threshold\n";
    for (std::size_t k = 0; k < rec.coeffs.size(); ++k) {
        out += std::to_string(k) + "," + rule_text(rec, k) + "," + rec.constant.get_str() + "," +
               std::to_string(rec.threshold) + "\n";
    }
    return out;
}

// ---- fractal

struct FractalArgs {
    Common c;
    std::size_t rows = 32;
    std::uint64_t maxCells = kDefaultBitmapCap;
};

std::string run_fractal(const FractalArgs& a) {
    const FpPoly f = parse_poly(a.c.poly, Prime(a.c.prime));
    try {
        return render_fractal(f, a.rows, a.maxCells).to_pbm();
    } catch (const std::length_error& e) {
        throw ComputationError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coefficient patterns of polynomial powers over prime fields"};
    app.require_subcommand(1);

    BlocksArgs blocks;
    auto* cb = app.add_subcommand("blocks", "line complexity a(0..n), or the accessible n-blocks with --list");
    add_common(cb, blocks.c, true, "csv,json", "csv");
    cb->add_option("--n,--terms", blocks.n, "block length")->capture_default_str();
    cb->add_option("--method", blocks.method, "closure, scan or recursion")
        ->check(CLI::IsMember({"closure", "scan", "recursion"}))
        ->capture_default_str();
    cb->add_flag("--list", blocks.list, "print the accessible blocks of length n");

    SeriesArgs series;
    auto* cs = app.add_subcommand("series", "generating-function coefficients");
    add_common(cs, series.c, false, "csv,json", "csv");
    cs->add_option("--family", series.family, "1px or 1xx2")->capture_default_str();
    cs->add_option("--terms,--n", series.terms, "number of coefficients")->capture_default_str();

    LimitsArgs limits;
    auto* cl = app.add_subcommand("limits", "limit function pieces, sharp constants, or the oscillation table");
    add_common(cl, limits.c, false, "csv,json", "csv");
    cl->add_option("--family", limits.family, "1px or 1xx2")->capture_default_str();
    cl->add_option("--what", limits.what, "table, pieces or extrema")
        ->check(CLI::IsMember({"table", "pieces", "extrema"}))
        ->capture_default_str();
    cl->add_option("--k,--n", limits.k, "largest exponent k in n = p^k / x")->capture_default_str();
    cl->add_option("--samples", limits.samples, "grid points per period")->capture_default_str();

    WillsonArgs willson;
    auto* cw = app.add_subcommand("willson", "transfer system and Perron root for one polynomial over F2");
    add_common(cw, willson.c, true, "tsv,json", "tsv");
    cw->add_option("--work-cap", willson.workCap, "factorization work cap")->capture_default_str();
    cw->add_flag("--exact", willson.exact, "fail with exit 3 if the minimal polynomial is PENDING");

    SurveyArgs surv;
    auto* cv = app.add_subcommand("survey", "all similarity classes up to a degree");
    add_common(cv, surv.c, false, "tsv,json", "tsv");
    cv->add_option("--max-deg,--n", surv.maxDeg, "largest degree")->capture_default_str();
    cv->add_option("--check-k", surv.K, "verify counts for k <= K")->capture_default_str();
    cv->add_option("--work-cap", surv.workCap, "factorization work cap")->capture_default_str();
    cv->add_flag("--exact", surv.exact, "fail with exit 3 if any minimal polynomial is PENDING");

    InferArgs infer;
    auto* ci = app.add_subcommand("infer", "fit a(pn+k) = sum c a(n+j) - C to computed a(n)");
    add_common(ci, infer.c, true, "csv,json", "csv");
    ci->add_option("--window,--terms", infer.window, "data length (0 = automatic)")->capture_default_str();

    FractalArgs fractal;
    auto* cf = app.add_subcommand("fractal", "PBM bitmap of the nonzero coefficients of f^0..f^(rows-1)");
    add_common(cf, fractal.c, true, "pbm", "pbm");
    cf->add_option("--rows,--n", fractal.rows, "row count")->check(CLI::PositiveNumber)->capture_default_str();
    cf->add_option("--max-cells", fractal.maxCells, "bitmap size cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::string text;
        const Common* c = nullptr;
        if (*cb) text = run_blocks(blocks), c = &blocks.c;
        else if (*cs) text = run_series(series), c = &series.c;
        else if (*cl) text = run_limits(limits), c = &limits.c;
        else if (*cw) text = run_willson(willson), c = &willson.c;
        else if (*cv) text = run_survey(surv), c = &surv.c;
        else if (*ci) text = run_infer(infer), c = &infer.c;
        else text = run_fractal(fractal), c = &fractal.c;
        emit(*c, text);
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
