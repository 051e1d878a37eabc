#include "involute/cli.hpp"

#include "involute/classify.hpp"
#include "involute/continuum.hpp"
#include "involute/errors.hpp"
#include "involute/polynomial.hpp"
#include "involute/spectral.hpp"
#include "involute/transform.hpp"
#include "involute/walk.hpp"
#include "involute/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace involute::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Pretty, Csv, Json };

struct Options {
    std::vector<std::string> gamma, delta;
    std::string gammac, lambda, custom;
    std::size_t n = 0;
    std::string format = "pretty";
    std::uint64_t seed = 1;
};

struct Source {
    std::optional<WeightSpec> spec;
    std::optional<LambdaSeq> lambda;
    std::size_t n = 0;
    std::string label;
};

Format parse_format(const std::string& f) {
    if (f == "pretty") return Format::Pretty;
    if (f == "csv") return Format::Csv;
    if (f == "json") return Format::Json;
    throw ValidationError("unknown format '" + f + "' (expected csv, json or pretty)");
}

LambdaSeq parse_list(const std::string& s) {
    LambdaSeq out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw ValidationError("empty lambda list");
    return out;
}

void add_family_flags(CLI::App* app, Options& o) {
    app->add_option("--gamma", o.gamma, "gamma(a,b) weight: a b")->expected(2)->allow_extra_args(false);
    app->add_option("--gammac", o.gammac, "gamma(c) weight: c");
    app->add_option("--delta", o.delta, "delta(a',b') weight: a' b'")->expected(2)->allow_extra_args(false);
    app->add_option("--lambda", o.lambda, "eigenvalue sequence l0,l1,...");
    app->add_option("--custom", o.custom, "CSV file of y,x,p/q weights");
    app->add_option("--n", o.n, "number of states");
}

Source resolve(const Options& o, bool need_source = true) {
    int given = !o.gamma.empty() + !o.gammac.empty() + !o.delta.empty() + !o.lambda.empty() + !o.custom.empty();
    if (given > 1) throw ValidationError("give exactly one of --gamma, --gammac, --delta, --lambda, --custom");
    if (given == 0) {
        if (need_source) throw ValidationError("a family (--gamma, --gammac, --delta, --custom) or --lambda is required");
        return {};
    }
    Source s;
    if (!o.lambda.empty()) {
        s.lambda = parse_list(o.lambda);
        s.n = s.lambda->size();
        if (o.n && o.n != s.n) throw ValidationError("--n disagrees with the length of --lambda");
        s.label = "lambda(" + o.lambda + ")";
        return s;
    }
    if (!o.gamma.empty()) s.spec = gamma_ab(Rational::parse(o.gamma[0]), Rational::parse(o.gamma[1]));
    else if (!o.gammac.empty()) s.spec = gamma_c(Rational::parse(o.gammac));
    else if (!o.delta.empty()) s.spec = delta_ab(Rational::parse(o.delta[0]), Rational::parse(o.delta[1]));
    else s.spec = load_custom_csv(o.custom);
    s.n = o.n;
    if (s.n == 0) {
        auto lim = domain_limit(*s.spec);
        if (!lim || std::holds_alternative<DeltaAB>(*s.spec)) throw ValidationError("--n is required for " + describe(*s.spec));
        s.n = *lim;
    }
    s.label = describe(*s.spec);
    return s;
}

WalkMatrix walk_of(const Source& s) {
    if (s.spec) return transition_matrix(*s.spec, s.n);
    WalkMatrix w{s.n, pl_matrix(*s.lambda), binomial_transform(*s.lambda)};
    return w;
}

// ---- output -------------------------------------------------------------

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad(const std::string& s, std::size_t width) {
    std::size_t w = display_width(s);
    return std::string(width > w ? width - w : 0, ' ') + s;
}

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json to_json(const RatMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

using Structural = std::function<bool(std::size_t, std::size_t)>;

void print_matrix(std::ostream& out, const RatMatrix& m, Format f, const Structural& structural, const std::string& title) {
    if (f == Format::Json) {
        out << json{{"name", title}, {"rows", m.rows()}, {"cols", m.cols()}, {"matrix", to_json(m)}}.dump() << "\n";
        return;
    }
    if (f == Format::Csv) {
        out << "row";
        for (std::size_t j = 0; j < m.cols(); ++j) out << "," << j;
        out << "\n";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out << i;
            for (std::size_t j = 0; j < m.cols(); ++j) out << "," << m(i, j).str();
            out << "\n";
        }
        return;
    }
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i][j] = structural && structural(i, j) && m(i, j).is_zero() ? "·" : m(i, j).str();
            width = std::max(width, display_width(cells[i][j]));
        }
    if (!title.empty()) out << title << "\n";
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "  " : "") << pad(row[j], width);
        out << "\n";
    }
}

Structural anti_triangular(std::size_t n) {
    return [n](std::size_t x, std::size_t z) { return x + z < n - 1; };
}

Structural upper_part() {
    return [](std::size_t x, std::size_t y) { return y > x; };
}

void print_table(std::ostream& out, Format f, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, json extra = json::object()) {
    if (f == Format::Json) {
        json recs = json::array();
        for (const auto& r : rows) {
            json o = json::object();
            for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
            recs.push_back(o);
        }
        extra["rows"] = recs;
        out << extra.dump() << "\n";
        return;
    }
    if (f == Format::Csv) {
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
            out << "\n";
        }
        return;
    }
    for (auto it = extra.begin(); it != extra.end(); ++it)
        out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = display_width(header[i]);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], display_width(r[i]));
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "  " : "") << pad(header[i], w[i]);
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "  " : "") << pad(r[i], w[i]);
        out << "\n";
    }
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

// ---- subcommands ----------------------------------------------------------

int cmd_matrix(const Options& o, const std::string& which, std::ostream& out) {
    Source s = resolve(o);
    WalkMatrix w = walk_of(s);
    Format f = parse_format(o.format);
    if (which == "P") print_matrix(out, w.P, f, anti_triangular(s.n), "P " + s.label + ", n=" + std::to_string(s.n));
    else if (which == "H") print_matrix(out, w.H, f, upper_part(), "H " + s.label + ", n=" + std::to_string(s.n));
    else if (which == "P2") print_matrix(out, two_step(w), f, {}, "P^2 " + s.label + ", n=" + std::to_string(s.n));
    else if (which == "J") print_matrix(out, anti_identity(s.n), f, {}, "J(" + std::to_string(s.n) + ")");
    else throw ValidationError("--which must be P, H, P2 or J");
    return 0;
}

int cmd_stationary(const Options& o, std::ostream& out) {
    Source s = resolve(o);
    WalkMatrix w = walk_of(s);
    Distribution pi = stationary(w);
    std::optional<Distribution> closed;
    if (s.spec && is_named(*s.spec)) closed = invariant_closed_form(*s.spec, s.n);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t x = 0; x < s.n; ++x) rows.push_back({std::to_string(x), pi[x].str()});
    json extra{{"source", s.label}, {"n", s.n}, {"detailed_balance", detailed_balance(w, pi)}};
    if (closed) extra["matches_closed_form"] = (*closed == pi);
    print_table(out, parse_format(o.format), {"x", "pi"}, rows, extra);
    return 0;
}

int cmd_spectrum(const Options& o, bool mixing, std::ostream& out) {
    Source s = resolve(o);
    WalkMatrix w = walk_of(s);
    Vec ev;
    if (s.spec) ev = eigenvalues_closed_form(*s.spec, s.n);
    else {
        ev = *s.lambda;
        for (std::size_t d = 1; d < ev.size(); d += 2) ev[d] = -ev[d];
    }
    Polynomial cp = charpoly(w.P);
    bool match = cp == Polynomial::from_roots(ev);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t d = 0; d < ev.size(); ++d) rows.push_back({std::to_string(d), ev[d].str()});
    json extra{{"source", s.label}, {"n", s.n}, {"charpoly", cp.str()}, {"charpoly_matches", match}};
    if (mixing) {
        if (!s.spec) throw ValidationError("--mixing needs a named family");
        MixingReport m = mixing_report(*s.spec, s.n);
        extra["second_abs_eigenvalue"] = m.second_abs_eigenvalue.str();
        extra["empirical_rate"] = m.empirical_rate;
    }
    print_table(out, parse_format(o.format), {"d", "eigenvalue"}, rows, extra);
    return match ? 0 : 2;
}

int cmd_eigvec(const Options& o, std::optional<std::size_t> degree, std::ostream& out) {
    Source s = resolve(o);
    if (!s.spec) throw ValidationError("eigvec needs --gamma");
    EigenSystem es = right_eigenvectors(*s.spec, s.n);
    Format f = parse_format(o.format);
    if (f == Format::Json) {
        json j{{"source", s.label}, {"n", s.n}, {"eigenvalues", to_json(es.eigenvalues)}, {"pi", to_json(es.pi)}};
        json r = json::array(), l = json::array();
        for (std::size_t d = 0; d < es.right.size(); ++d) {
            if (degree && d != *degree) continue;
            r.push_back(to_json(es.right[d]));
            l.push_back(to_json(es.left[d]));
        }
        j["right"] = r;
        j["left"] = l;
        out << j.dump() << "\n";
        return 0;
    }
    std::vector<std::string> header{"d", "eigenvalue", "side"};
    for (std::size_t x = 0; x < s.n; ++x) header.push_back("x" + std::to_string(x));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t d = 0; d < es.right.size(); ++d) {
        if (degree && d != *degree) continue;
        for (int side = 0; side < 2; ++side) {
            std::vector<std::string> row{std::to_string(d), es.eigenvalues[d].str(), side ? "left" : "right"};
            const Vec& v = side ? integer_cleared(es.left[d]) : es.right[d];
            for (const auto& x : v) row.push_back(x.str());
            rows.push_back(std::move(row));
        }
    }
    print_table(out, f, header, rows, json{{"source", s.label}, {"n", s.n}});
    return 0;
}

json report_json(const PropertyReport& r) {
    json j{{"adep", r.adep}, {"gadep", r.gadep}, {"is_binomial_transform", r.is_binomial_transform}};
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    return j;
}

int cmd_check(const Options& o, const std::string& property, std::ostream& out, std::ostream& err) {
    Source s = resolve(o);
    Format f = parse_format(o.format);
    json result{{"source", s.label}, {"n", s.n}, {"property", property}};
    bool ok = true;
    if (property == "stochastic") {
        if (!s.lambda) throw ValidationError("'stochastic' is checked on --lambda");
        auto v = is_stochastic(*s.lambda);
        ok = v.stochastic;
        result["stochastic"] = ok;
        result["sums"] = to_json(stochastic_sums(*s.lambda));
        if (v.witness) result["witness_z"] = *v.witness;
        if (!ok) err << "not stochastic: " << v.reason << "\n";
    } else if (property == "ergodic") {
        if (s.lambda) {
            ok = is_ergodic_lambda(*s.lambda);
        } else {
            ErgodicityReport r = ergodicity(walk_of(s));
            ok = r.ergodic;
            result["irreducible"] = r.irreducible;
            result["aperiodic"] = r.aperiodic;
        }
        result["ergodic"] = ok;
    } else if (property == "reversible") {
        WalkMatrix w = walk_of(s);
        auto pi = positive_reversible(w.P);
        ok = pi.has_value();
        result["reversible"] = ok;
        if (pi) result["pi"] = to_json(*pi);
    } else if (property == "kolmogorov") {
        ok = kolmogorov(walk_of(s));
        result["kolmogorov"] = ok;
    } else if (property == "global") {
        if (!s.lambda) throw ValidationError("'global' is checked on --lambda");
        ok = is_globally_reversible(*s.lambda);
        result["globally_reversible"] = ok;
    } else if (property == "properties") {
        PropertyReport r = property_report(walk_of(s).H);
        result.update(report_json(r));
        ok = r.gadep && r.is_binomial_transform;
    } else if (property == "weight") {
        if (!s.spec) throw ValidationError("'weight' needs a weight family");
        WeightFlags w = classify_weight(*s.spec, s.n);
        result["atomic"] = w.atomic;
        result["star_symmetric"] = w.star_symmetric;
        result["strictly_positive"] = w.strictly_positive;
    } else {
        throw ValidationError("unknown property '" + property + "' (stochastic, ergodic, reversible, kolmogorov, global, properties, weight)");
    }
    if (f == Format::Json) out << result.dump() << "\n";
    else {
        for (auto it = result.begin(); it != result.end(); ++it)
            out << it.key() << (f == Format::Csv ? "," : ": ") << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
    return ok ? 0 : 2;
}

int cmd_classify(const Options& o, const std::string& mu, const std::string& nu, std::ostream& out) {
    Source s = resolve(o, false);
    Classification c;
    json j;
    if (s.lambda) {
        c = classify_walk(*s.lambda);
        j = {{"lambda", to_json(*s.lambda)}};
    } else {
        if (mu.empty() || nu.empty() || !o.n) throw ValidationError("classify needs --lambda, or --mu, --nu and --n");
        c = params_from_mu_nu(Rational::parse(mu), Rational::parse(nu), o.n);
        j = {{"mu", mu}, {"nu", nu}, {"n", o.n}};
    }
    j["classification"] = describe(c);
    j["classified"] = is_classified(c);
    Format f = parse_format(o.format);
    if (f == Format::Json) out << j.dump() << "\n";
    else out << describe(c) << "\n";
    return is_classified(c) ? 0 : 2;
}

int cmd_ladder(const Options& o, const std::string& mu, std::ostream& out) {
    if (mu.empty() || !o.n) throw ValidationError("ladder needs --mu and --n");
    Rational m = Rational::parse(mu);
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : exceptional_ladder(m, o.n)) rows.push_back({std::to_string(r.m), r.nu.str(), r.a_prime.str()});
    print_table(out, parse_format(o.format), {"m", "nu", "a_prime"}, rows,
                json{{"mu", m.str()}, {"n", o.n}, {"lower_bound_m", ladder_lower_bound(m, o.n)}});
    return 0;
}

int cmd_simulate(const Options& o, std::size_t start, std::size_t steps, bool summary, std::ostream& out) {
    Source s = resolve(o);
    WalkMatrix w = walk_of(s);
    Trajectory t = simulate(w, start, steps, o.seed);
    Format f = parse_format(o.format);
    if (summary) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t x = 0; x < s.n; ++x) rows.push_back({std::to_string(x), fmt_double(t.empirical[x])});
        json extra{{"source", s.label}, {"steps", steps}, {"seed", o.seed}};
        try {
            extra["tv_to_stationary"] = total_variation(t.empirical, stationary(w));
        } catch (const NotIrreducible&) {
        }
        print_table(out, f, {"state", "frequency"}, rows, extra);
        return 0;
    }
    if (f == Format::Json) {
        out << json{{"source", s.label}, {"seed", o.seed}, {"trajectory", t.states}}.dump() << "\n";
        return 0;
    }
    out << "step,state\n";
    for (std::size_t i = 0; i < t.states.size(); ++i) out << i << "," << t.states[i] << "\n";
    return 0;
}

int cmd_subsets(const Options& o, std::size_t m, const std::string& p, std::ostream& out) {
    SubsetWalk s = subset_walk(m, Rational::parse(p));
    bool cert = verify_subset_spectrum(s);
    bool stat = stationary(s.walk) == s.pi;
    std::vector<std::vector<std::string>> rows;
    for (const auto& [v, mult] : s.eigenvalues) rows.push_back({v.str(), std::to_string(mult)});
    Format f = parse_format(o.format);
    json extra{{"m", m}, {"p", s.p.str()}, {"states", s.walk.n}, {"spectrum_certified", cert}, {"stationary_matches", stat}};
    if (f == Format::Json) extra["pi"] = to_json(s.pi);
    print_table(out, f, {"eigenvalue", "multiplicity"}, rows, extra);
    if (f == Format::Pretty) {
        out << "pi by subset bitmask:\n";
        for (std::size_t X = 0; X < s.pi.size(); ++X) out << "  " << X << ": " << s.pi[X] << "\n";
    }
    return cert && stat ? 0 : 2;
}

int cmd_continuum(const Options& o, const std::vector<int>& kappa, bool trig, const std::string& what,
                  std::size_t degree, std::ostream& out) {
    using namespace continuum;
    Format f = parse_format(o.format);
    if (what == "convergence") {
        int a = kappa.empty() ? 0 : kappa[0], b = kappa.empty() ? 0 : kappa[1];
        std::vector<std::size_t> ns{10, 20, 40, 80};
        auto d = discrete_convergence(a, b, degree, ns);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back({std::to_string(ns[i]), fmt_double(d[i])});
        print_table(out, f, {"n", "distance"}, rows);
        return 0;
    }
    if (trig == !kappa.empty()) throw ValidationError("give exactly one of --kappa a b or --trig");
    ContinuousWalk w = trig ? ContinuousWalk::trig() : ContinuousWalk::kappa(kappa[0], kappa[1]);
    std::vector<std::vector<std::string>> rows;
    if (what == "eigenfunction") {
        PolyFunction g = eigenfunctions(w, degree)[degree];
        for (double x : residual_grid()) rows.push_back({fmt_double(x), fmt_double(g(x))});
    } else if (what == "invariant") {
        for (double x : residual_grid()) rows.push_back({fmt_double(x), fmt_double(cts_invariant(w, x))});
    } else if (what == "residual") {
        PolyFunction g = eigenfunctions(w, degree)[degree];
        double ev = continuum_eigenvalue(w, degree);
        for (double x : residual_grid()) rows.push_back({fmt_double(x), fmt_double(lp_apply(w, g, x) - ev * g(x))});
    } else if (what == "summary") {
        for (std::size_t d = 0; d <= degree; ++d)
            rows.push_back({std::to_string(d), fmt_double(continuum_eigenvalue(w, d)), fmt_double(eigen_residual(w, d))});
        print_table(out, f, {"d", "eigenvalue", "residual"}, rows, json{{"fixed_point_residual", fixed_point_residual(w)}});
        return 0;
    } else {
        throw ValidationError("--what must be eigenfunction, invariant, residual, summary or convergence");
    }
    print_table(out, f, {"x", "value"}, rows);
    return 0;
}

int cmd_conjecture(const Options& o, std::size_t max_den, std::size_t samples, std::size_t threads, bool all,
                   std::ostream& out) {
    if (!o.n) throw ValidationError("conjecture needs --n");
    SearchConfig cfg;
    cfg.max_denominator = static_cast<long>(max_den);
    cfg.samples = samples;
    cfg.threads = threads;
    cfg.seed = o.seed;
    cfg.keep_all_stochastic = all;
    SearchSummary sum = conjecture_search(o.n, cfg);
    for (const auto& r : sum.records) {
        out << json{{"lambda", to_json(r.lambda)},
                    {"stochastic", r.stochastic},
                    {"reversible", r.reversible},
                    {"classification", describe(r.classification)}}
                   .dump()
            << "\n";
    }
    out << json{{"summary", {{"n", o.n}, {"examined", sum.examined}, {"stochastic", sum.stochastic},
                             {"reversible", sum.reversible}, {"unclassified_reversible", sum.unclassified_reversible}}}}
               .dump()
        << "\n";
    return sum.unclassified_reversible ? 2 : 0;
}

// ---- reproduction targets -------------------------------------------------

// Linear combination of lambda_0..lambda_2 written with mu, nu.
std::string symbolic(const std::vector<long>& c) {
    static const char* names[] = {"", "μ", "ν"};
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        long mag = std::labs(c[i]);
        s += c[i] < 0 ? (s.empty() ? "-" : "-") : (s.empty() ? "" : "+");
        if (i == 0) s += std::to_string(mag);
        else s += (mag != 1 ? std::to_string(mag) : "") + names[i];
    }
    return s.empty() ? "0" : s;
}

int repro(const std::string& target, const Options& o, const std::string& tau, std::ostream& out) {
    Format f = parse_format(o.format);
    const std::map<std::string, std::string> aliases{{"example-7", "ladder-table"}};
    std::string t = aliases.count(target) ? aliases.at(target) : target;
    if (t == "intro-matrices") {
        const std::vector<WeightSpec> specs{gamma_ab(0, 0), gamma_ab(1, 0), gamma_ab(0, 1),
                                            gamma_c(Rational(1, 2)), gamma_c(2), delta_ab(4, 2)};
        for (const auto& s : specs) {
            print_matrix(out, transition_matrix(s, 4).P, f, anti_triangular(4), "P " + describe(s));
            if (f == Format::Pretty) out << "\n";
        }
        return 0;
    }
    if (t == "small-transform") {
        // H^lambda for lambda = (1, mu, nu); entry (x,y) = binom(x,y) sum_e (-1)^e binom(x-y,e) lambda_{y+e}
        out << "H^(1,μ,ν)\n";
        std::vector<std::vector<std::string>> cells(3, std::vector<std::string>(3, "·"));
        std::size_t width = 1;
        for (long x = 0; x < 3; ++x)
            for (long y = 0; y <= x; ++y) {
                std::vector<long> c(3, 0);
                long bxy = binom(Rational(x), y).num().get_si();
                for (long e = 0; e <= x - y; ++e)
                    c[static_cast<std::size_t>(y + e)] += (e % 2 ? -1 : 1) * bxy * binom(Rational(x - y), e).num().get_si();
                cells[x][y] = symbolic(c);
                width = std::max(width, display_width(cells[x][y]));
            }
        for (const auto& row : cells) {
            for (std::size_t j = 0; j < 3; ++j) out << (j ? "  " : "") << pad(row[j], width);
            out << "\n";
        }
        return 0;
    }
    if (t == "gadep-counterexamples") {
        std::vector<Rational> taus;
        if (!tau.empty()) taus.push_back(Rational::parse(tau));
        else taus = {Rational(1, 4), Rational(1)};
        for (const auto& tv : taus)
            for (auto which : {Counterexample::L4, Counterexample::H5}) {
                RatMatrix m = gadep_counterexample(which, tv);
                std::string name = std::string(which == Counterexample::L4 ? "L4" : "H5") + " tau=" + tv.str();
                print_matrix(out, m, f, upper_part(), name);
                out << report_json(property_report(m)).dump() << "\n";
                if (f == Format::Pretty) out << "\n";
            }
        return 0;
    }
    if (t == "ladder-table") {
        const Rational mu(2, 3);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : exceptional_ladder(mu, 10)) {
            Classification c = params_from_mu_nu(mu, r.nu, 10);
            rows.push_back({r.nu.str(), r.a_prime.str(), std::to_string(r.m), describe(c)});
        }
        print_table(out, f, {"nu", "a_prime", "b_prime", "classification"}, rows, json{{"mu", "2/3"}, {"n", 10}});
        return 0;
    }
    if (t == "ladder-values") {
        const Rational mu(2, 3);
        std::vector<std::vector<std::string>> rows;
        for (long m = 2; m <= 6; ++m) rows.push_back({std::to_string(m), nu_ladder(mu, m).str()});
        print_table(out, f, {"m", "nu"}, rows, json{{"mu", "2/3"}});
        return 0;
    }
    if (t == "eigvec-convergence") {
        const std::vector<std::size_t> ns{10, 20, 40, 80};
        std::vector<std::vector<std::string>> rows;
        for (std::size_t d : {1, 2}) {
            auto dist = continuum::discrete_convergence(0, 0, d, ns);
            for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back({std::to_string(d), std::to_string(ns[i]), fmt_double(dist[i])});
        }
        print_table(out, f == Format::Pretty ? Format::Csv : f, {"d", "n", "distance"}, rows);
        return 0;
    }
    throw ValidationError("unknown repro target '" + target +
                          "' (intro-matrices, small-transform, gadep-counterexamples, ladder-table, ladder-values, eigvec-convergence)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact involutive random walks and binomial transforms"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool family) {
        if (family) add_family_flags(sub, o);
        else sub->add_option("--n", o.n, "number of states");
        sub->add_option("--format", o.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
        sub->add_option("--seed", o.seed, "random seed");
    };

    std::string which = "P";
    auto* matrix = app.add_subcommand("matrix", "transition or down-step matrix");
    common(matrix, true);
    matrix->add_option("--which", which, "P, H, P2 or J");

    auto* stat = app.add_subcommand("stationary", "exact stationary distribution");
    common(stat, true);

    bool mixing = false;
    auto* spec = app.add_subcommand("spectrum", "eigenvalues and characteristic polynomial");
    common(spec, true);
    spec->add_flag("--mixing", mixing, "report second absolute eigenvalue and fitted decay");

    std::optional<std::size_t> degree;
    auto* eig = app.add_subcommand("eigvec", "right and left eigenvectors of P(gamma(a,b))");
    common(eig, true);
    eig->add_option("--degree", degree, "only this degree");

    std::string property;
    auto* check = app.add_subcommand("check", "decide a property");
    common(check, true);
    check->add_option("property", property, "stochastic|ergodic|reversible|kolmogorov|global|properties|weight")->required();

    std::string mu, nu;
    auto* classify = app.add_subcommand("classify", "reversibility classification");
    common(classify, true);
    classify->add_option("--mu", mu);
    classify->add_option("--nu", nu);

    auto* ladder = app.add_subcommand("ladder", "exceptional second-eigenvalue ladder");
    common(ladder, false);
    ladder->add_option("--mu", mu)->required();

    std::size_t start = 0, steps = 10;
    bool summary = false;
    auto* sim = app.add_subcommand("simulate", "sample a trajectory");
    common(sim, true);
    sim->add_option("--start", start);
    sim->add_option("--steps", steps);
    sim->add_flag("--summary", summary, "print visit frequencies instead of the trajectory");

    std::size_t m = 2;
    std::string p = "1/2";
    auto* subsets = app.add_subcommand("subsets", "walk on subsets of an m-set");
    common(subsets, false);
    subsets->add_option("--m", m);
    subsets->add_option("--p", p);

    std::vector<int> kappa;
    bool trig = false;
    std::string what = "summary";
    std::size_t cdeg = 3;
    auto* cont = app.add_subcommand("continuum", "walks on [0,1]");
    common(cont, false);
    cont->add_option("--kappa", kappa, "exponents a b")->expected(2);
    cont->add_flag("--trig", trig);
    cont->add_option("--what", what, "eigenfunction|invariant|residual|summary|convergence");
    cont->add_option("--degree", cdeg);

    std::size_t max_den = 8, samples = 1000, threads = 0;
    bool all = false;
    auto* conj = app.add_subcommand("conjecture", "search for reversible walks outside the families");
    common(conj, false);
    conj->add_option("--max-den", max_den);
    conj->add_option("--samples", samples);
    conj->add_option("--threads", threads, "worker threads (0: INVOLUTE_THREADS or hardware)");
    conj->add_flag("--all", all, "emit every stochastic candidate");

    std::string target, tau;
    auto* rep = app.add_subcommand("repro", "reproduce displayed matrices, tables and figure data");
    common(rep, false);
    rep->add_option("target", target)->required();
    rep->add_option("--tau", tau);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*matrix) return cmd_matrix(o, which, out);
        if (*stat) return cmd_stationary(o, out);
        if (*spec) return cmd_spectrum(o, mixing, out);
        if (*eig) return cmd_eigvec(o, degree, out);
        if (*check) return cmd_check(o, property, out, err);
        if (*classify) return cmd_classify(o, mu, nu, out);
        if (*ladder) return cmd_ladder(o, mu, out);
        if (*sim) return cmd_simulate(o, start, steps, summary, out);
        if (*subsets) return cmd_subsets(o, m, p, out);
        if (*cont) return cmd_continuum(o, kappa, trig, what, cdeg, out);
        if (*conj) return cmd_conjecture(o, max_den, samples, threads, all, out);
        if (*rep) return repro(target, o, tau, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace involute::cli
