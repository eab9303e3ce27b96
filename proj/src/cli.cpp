#include "novlag/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>

#include "novlag/diffpoly.hpp"
#include "novlag/error.hpp"
#include "novlag/gdtransform.hpp"
#include "novlag/novikov.hpp"
#include "novlag/parser.hpp"
#include "novlag/random.hpp"
#include "novlag/repr.hpp"
#include "novlag/variational.hpp"

namespace novlag::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Context {
    const Command& cmd;
    std::ostream& out;

    const std::string& arg(std::size_t i) const { return cmd.args.at(i); }

    DiffPoly expr(std::size_t i) const {
        if (cmd.mode == Mode::nov) return eval(parse_nov(arg(i)));
        return parse_diff(arg(i));
    }

    int integer(std::size_t i, const char* what) const {
        const std::string& s = arg(i);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError(std::string("expected an integer ") + what + ", got '" + s + "'");
        }
        if (used != s.size()) throw UsageError(std::string("expected an integer ") + what + ", got '" + s + "'");
        return v;
    }

    Partition partition(std::size_t i) const {
        try {
            return parse_partition(arg(i));
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }

    /// Multidegree from the remaining args; each may be a comma list.
    Multidegree multidegree_from(std::size_t first) const {
        Multidegree lambda;
        for (std::size_t i = first; i < cmd.args.size(); ++i) {
            std::stringstream ss(arg(i));
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                std::size_t used = 0;
                int v = -1;
                try {
                    v = std::stoi(item, &used);
                } catch (const std::exception&) {
                }
                if (used != item.size() || v < 0) throw UsageError("bad multidegree entry '" + item + "'");
                lambda.push_back(v);
            }
        }
        if (lambda.empty()) throw UsageError("missing multidegree");
        return lambda;
    }

    void emit(const json& j, const std::string& text) const {
        if (cmd.json)
            out << j.dump(2) << '\n';
        else
            out << text << '\n';
    }
};

json poly_list(const std::vector<DiffPoly>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(to_string(p));
    return arr;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) s += '\n';
        s += lines[i];
    }
    return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

json partition_json(const Partition& p) { return json(p.parts()); }

// ---------------------------------------------------------------------------
// Verb handlers

int do_normalize(const Context& c) {
    const DiffPoly p = c.expr(0);
    c.emit(json{{"result", to_string(p)}}, to_string(p));
    return kOk;
}

int do_derive(const Context& c) {
    const DiffPoly p = derive(c.expr(0));
    c.emit(json{{"result", to_string(p)}}, to_string(p));
    return kOk;
}

int do_partial(const Context& c) {
    const DiffPoly p = partial(c.expr(0), c.integer(1, "variable"), c.integer(2, "order"));
    c.emit(json{{"result", to_string(p)}}, to_string(p));
    return kOk;
}

int do_degrees(const Context& c) {
    const DiffPoly p = c.expr(0);
    const auto md = multidegree(p);
    json j;
    std::vector<std::string> lines;
    switch (md.kind) {
        case Homogeneity::zero:
            j["multidegree"] = "zero";
            lines.push_back("multidegree: zero");
            break;
        case Homogeneity::inhomogeneous:
            j["multidegree"] = nullptr;
            lines.push_back("multidegree: non-homogeneous");
            break;
        case Homogeneity::homogeneous: {
            j["multidegree"] = md.degrees;
            std::string s;
            for (std::size_t i = 0; i < md.degrees.size(); ++i) s += (i ? "," : "") + std::to_string(md.degrees[i]);
            lines.push_back("multidegree: (" + s + ")");
            break;
        }
    }
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto d = degrees(it->first);
        terms.push_back({{"monomial", to_string(it->first)}, {"deg", d.deg}, {"d", d.d}, {"per_var", d.per_var}});
        lines.push_back(to_string(it->first) + ": deg " + std::to_string(d.deg) + ", d " + std::to_string(d.d));
    }
    j["terms"] = terms;
    c.emit(j, join_lines(lines));
    return kOk;
}

int do_euler(const Context& c) {
    const DiffPoly f = c.expr(0);
    const auto r = euler_all(f, c.cmd.vars);
    std::vector<std::string> lines;
    for (std::size_t k = 0; k < r.components.size(); ++k)
        lines.push_back("E^" + std::to_string(k + 1) + " = " + to_string(r.components[k]));
    if (lines.empty()) lines.push_back("(no variables)");
    c.emit(json{{"euler", poly_list(r.components)}}, join_lines(lines));
    return kOk;
}

int do_null_lagrangian(const Context& c) {
    const bool b = is_null_lagrangian(c.expr(0));
    c.emit(json{{"null_lagrangian", b}}, bool_text(b));
    return kOk;
}

int do_antiderivative(const Context& c) {
    const DiffPoly g = antiderivative(c.expr(0));
    c.emit(json{{"antiderivative", to_string(g)}}, to_string(g));
    return kOk;
}

int do_symmetric(const Context& c) {
    const auto r = is_symmetric(c.expr(0));
    json j{{"symmetric", r.symmetric}};
    std::string text = bool_text(r.symmetric);
    if (r.certificate) {
        j["generators"] = to_string(r.certificate->generator_part);
        j["potential"] = to_string(r.certificate->potential);
        text += "\ngenerators: " + to_string(r.certificate->generator_part);
        text += "\npotential: " + to_string(r.certificate->potential);
    }
    c.emit(j, text);
    return kOk;
}

int do_criterion(const Context& c) {
    const auto r = criterion_check(c.expr(0), c.cmd.vars);
    json j{{"condition1", r.condition1},
           {"condition2", r.condition2},
           {"condition3", r.condition3},
           {"euler", poly_list(r.euler.components)},
           {"some_implies_all", r.some_implies_all},
           {"equivalent", r.equivalent()}};
    std::vector<std::string> lines{
        "condition1 (symmetric, deg > 1): " + bool_text(r.condition1),
        "condition2 (E^k = 0 for all k): " + bool_text(r.condition2),
        "condition3 (E^k = 0 for some k): " + bool_text(r.condition3),
    };
    for (std::size_t k = 0; k < r.euler.components.size(); ++k)
        lines.push_back("E^" + std::to_string(k + 1) + " = " + to_string(r.euler.components[k]));
    lines.push_back("equivalent: " + bool_text(r.equivalent()));
    c.emit(j, join_lines(lines));
    return r.equivalent() ? kOk : kDomainError;
}

int do_exactness(const Context& c) {
    const int d = c.integer(0, "differential degree");
    const Multidegree lambda = c.multidegree_from(1);
    const auto r = exactness_check(lambda, d);
    json j{{"dimension", r.dimension}, {"euler_rank", r.euler_rank}, {"kernel_dim", r.kernel_dim},
           {"image_dim", r.image_dim}, {"image_in_kernel", r.image_in_kernel}, {"exact", r.exact()}};
    std::vector<std::string> lines{
        "dimension: " + std::to_string(r.dimension),
        "dim ker E: " + std::to_string(r.kernel_dim),
        "dim im D: " + std::to_string(r.image_dim),
        "exact: " + bool_text(r.exact()),
    };
    c.emit(j, join_lines(lines));
    return kOk;
}

int do_nov_eval(const Context& c) {
    const NovExpr e = parse_nov(c.arg(0));
    const DiffPoly p = eval(e);
    c.emit(json{{"expression", to_string(e)}, {"result", to_string(p)}}, to_string(p));
    return kOk;
}

int do_basis(const Context& c) {
    const auto basis = nov_basis(c.multidegree_from(0));
    json arr = json::array();
    std::vector<std::string> lines;
    for (const auto& m : basis) {
        arr.push_back(to_string(m));
        lines.push_back(to_string(m));
    }
    c.emit(json{{"size", basis.size()}, {"basis", arr}}, join_lines(lines));
    return kOk;
}

int do_sym_basis(const Context& c) {
    const auto basis = sym_basis(c.multidegree_from(0));
    json arr = json::array();
    std::vector<std::string> lines;
    for (const auto& e : basis) {
        arr.push_back({{"element", to_string(e)}, {"expanded", to_string(e.value)}});
        lines.push_back(to_string(e) + " = " + to_string(e.value));
    }
    c.emit(json{{"size", basis.size()}, {"basis", arr}}, join_lines(lines));
    return kOk;
}

int do_dim(const Context& c) {
    const int n = c.integer(0, "degree");
    const auto nov = multilinear_nov_dim(n);
    const auto sym = multilinear_sym_dim(n);
    c.emit(json{{"n", n}, {"novikov", nov}, {"symmetric", sym}},
           "novikov: " + std::to_string(nov) + "\nsymmetric: " + std::to_string(sym));
    return kOk;
}

int do_gd_transform(const Context& c) {
    const TensorPoly phi = gd_transform(c.expr(0));
    c.emit(json{{"shape", phi.shape()}, {"result", to_string(phi)}}, to_string(phi));
    return kOk;
}

int do_gd_euler(const Context& c) {
    const TensorPoly phi = gd_euler(gd_transform(c.expr(0)), c.integer(1, "variable"));
    c.emit(json{{"shape", phi.shape()}, {"result", to_string(phi)}}, to_string(phi));
    return kOk;
}

int do_commute_check(const Context& c) {
    const bool b = commute_check(c.expr(0), c.integer(1, "variable"));
    c.emit(json{{"commutes", b}}, bool_text(b));
    return b ? kOk : kDomainError;
}

json decomposition_json(const DecompositionTable& t) {
    json terms = json::array();
    for (const auto& term : t.terms)
        terms.push_back({{"beta", partition_json(term.beta)},
                         {"multiplicity", term.multiplicity},
                         {"specht_dim", term.specht_dim},
                         {"admissible", term.admissible}});
    return json{{"n", t.n}, {"terms", terms}, {"total_dim", t.total_dim}};
}

int do_decompose(const Context& c) {
    const auto table = sym_decomposition(c.integer(0, "n"));
    std::vector<std::string> lines{"beta multiplicity specht_dim admissible"};
    for (const auto& t : table.terms)
        lines.push_back(to_string(t.beta) + " " + std::to_string(t.multiplicity) + " " +
                        std::to_string(t.specht_dim) + " " + bool_text(t.admissible));
    lines.push_back("total_dim " + std::to_string(table.total_dim));
    c.emit(decomposition_json(table), join_lines(lines));
    return kOk;
}

int do_kostka(const Context& c) {
    const auto k = kostka(c.partition(0), c.partition(1));
    c.emit(json{{"kostka", k}}, std::to_string(k));
    return kOk;
}

int do_specht(const Context& c) {
    const auto d = specht_dim(c.partition(0));
    c.emit(json{{"specht_dim", d}}, std::to_string(d));
    return kOk;
}

int do_w_alpha(const Context& c) {
    const auto w = w_alpha(c.partition(0));
    c.emit(json{{"w_alpha", partition_json(w)}}, to_string(w));
    return kOk;
}

int do_partitions(const Context& c) {
    json arr = json::array();
    std::vector<std::string> lines;
    for (const auto& p : partitions(c.integer(0, "n"))) {
        arr.push_back(partition_json(p));
        lines.push_back(to_string(p));
    }
    c.emit(json{{"partitions", arr}}, join_lines(lines));
    return kOk;
}

int do_admissible(const Context& c) {
    const bool b = is_admissible(c.partition(0));
    c.emit(json{{"admissible", b}}, bool_text(b));
    return kOk;
}

int do_check_identity(const Context& c) {
    Identity id;
    try {
        id = identity_from_name(c.arg(0));
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    if (c.cmd.args.size() - 1 != identity_arity(id))
        throw UsageError(std::string(identity_name(id)) + " takes " + std::to_string(identity_arity(id)) +
                         " arguments");
    std::vector<DiffPoly> args;
    for (std::size_t i = 1; i < c.cmd.args.size(); ++i) args.push_back(c.expr(i));
    const DiffPoly defect = identity_defect(id, args);
    c.emit(json{{"identity", identity_name(id)}, {"holds", defect.is_zero()}, {"defect", to_string(defect)}},
           bool_text(defect.is_zero()));
    return kOk;
}

int do_self_test(const Context& c) {
    Rng rng(c.cmd.seed);
    const int trials = c.cmd.trials;
    RandomPolyOptions opts;
    opts.max_terms = 2;
    json report = json::object();
    std::vector<std::string> lines;
    bool all = true;
    const auto record = [&](const std::string& name, int passed) {
        const bool ok = passed == trials;
        all = all && ok;
        report[name] = {{"passed", passed}, {"trials", trials}};
        lines.push_back((ok ? "PASS " : "FAIL ") + name + " " + std::to_string(passed) + "/" + std::to_string(trials));
    };

    for (Identity id : all_identities()) {
        int passed = 0;
        for (int t = 0; t < trials; ++t) {
            std::vector<DiffPoly> args;
            for (std::size_t i = 0; i < identity_arity(id); ++i) args.push_back(random_diffpoly(rng, opts));
            passed += check_identity(id, args) ? 1 : 0;
        }
        record(std::string(identity_name(id)), passed);
    }
    {
        int passed = 0;
        for (int t = 0; t < trials; ++t) {
            const DiffPoly g = random_diffpoly(rng);
            const DiffPoly f = derive(g);
            passed += (euler_all(f).is_zero() && derive(antiderivative(f)) == f) ? 1 : 0;
        }
        record("euler-after-derive", passed);
    }
    {
        int passed = 0;
        const std::vector<Multidegree> shapes{{2}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 2}};
        for (int t = 0; t < trials; ++t) {
            const auto& lambda = shapes[static_cast<std::size_t>(t) % shapes.size()];
            const DiffPoly f = random_homogeneous(rng, lambda, t % 4);
            bool ok = true;
            for (std::size_t k = 1; k <= lambda.size(); ++k) ok = ok && commute_check(f, static_cast<int>(k));
            passed += ok ? 1 : 0;
        }
        record("gd-commute", passed);
    }
    c.emit(report, join_lines(lines));
    return all ? kOk : kDomainError;
}

struct Verb {
    std::string summary;
    std::size_t min_args;
    std::size_t max_args;
    std::function<int(const Context&)> handler;
};

constexpr std::size_t kMany = static_cast<std::size_t>(-1);

const std::map<std::string, Verb>& verb_table() {
    static const std::map<std::string, Verb> table{
        {"normalize", {"EXPR: canonical form of an expression", 1, 1, do_normalize}},
        {"derive", {"EXPR: total derivative D", 1, 1, do_derive}},
        {"partial", {"EXPR K I: formal partial derivative by x_K^(I)", 3, 3, do_partial}},
        {"degrees", {"EXPR: multidegree and per-term deg / d", 1, 1, do_degrees}},
        {"euler", {"EXPR: Euler operators E^1..E^n", 1, 1, do_euler}},
        {"null-lagrangian", {"EXPR: whether every E^k vanishes", 1, 1, do_null_lagrangian}},
        {"antiderivative", {"EXPR: g with D(g) = EXPR, or NotExact", 1, 1, do_antiderivative}},
        {"symmetric", {"EXPR: membership in S<X> with certificate", 1, 1, do_symmetric}},
        {"criterion", {"EXPR: the three null Lagrangian conditions", 1, 1, do_criterion}},
        {"exactness", {"D LAMBDA...: ker E versus im D on one component", 2, kMany, do_exactness}},
        {"nov-eval", {"NOVEXPR: evaluate a Novikov expression in F{X}", 1, 1, do_nov_eval}},
        {"basis", {"LAMBDA...: Novikov basis of a multidegree", 1, kMany, do_basis}},
        {"sym-basis", {"LAMBDA...: symmetric basis of a multidegree", 1, kMany, do_sym_basis}},
        {"dim", {"N: multilinear Novikov and symmetric dimensions", 1, 1, do_dim}},
        {"gd-transform", {"EXPR: Gel'fand-Dikii transform", 1, 1, do_gd_transform}},
        {"gd-euler", {"EXPR K: transformed Euler operator applied to F(EXPR)", 2, 2, do_gd_euler}},
        {"commute-check", {"EXPR K: F(E^K(f)) == transformed E^K(F(f))", 2, 2, do_commute_check}},
        {"decompose", {"N: Specht decomposition of Sym_{N+2}", 1, 1, do_decompose}},
        {"kostka", {"BETA MU: Kostka number", 2, 2, do_kostka}},
        {"specht", {"BETA: Specht module dimension", 1, 1, do_specht}},
        {"w-alpha", {"ALPHA: the partition w(alpha)", 1, 1, do_w_alpha}},
        {"partitions", {"N: partitions of N", 1, 1, do_partitions}},
        {"admissible", {"BETA: admissibility of a Specht shape", 1, 1, do_admissible}},
        {"check-identity", {"NAME ARGS...: verify an identity on substituted arguments", 1, kMany, do_check_identity}},
        {"self-test", {"randomized identity and complex checks (--seed, --trials)", 0, 0, do_self_test}},
    };
    return table;
}

const char* kGrammar = R"grammar(Expression grammar (diff mode, default):
  expr := term (('+'|'-') term)*     term := rational? ('*'? factor)+
  factor := var | '(' expr ')'       var := 'x' digits primes? power?
  primes := ' | '' | ^(digits)       power := ^digits
  e.g. "2*x1''*x1*x2 - 3*x1^2*x2''", "x1^(5)"
Nov mode (--mode nov, and nov-eval):
  '*' Novikov product, 'o' symmetrized product, [a,b] commutator,
  e.g. "(5/2)*((x1 o x1) o x2) - 3*((x1 o x2) o x1)"
Identities: right-symmetry left-commutativity triple-product tortken circ-degree5 lie-degree5
Partitions are written as comma lists, e.g. 2,1,1.
Exit codes: 0 success, 1 domain error (e.g. NotExact), 2 usage or parse error.)grammar";

}  // namespace

std::vector<std::string> verbs() {
    std::vector<std::string> out;
    for (const auto& [name, v] : verb_table()) out.push_back(name);
    return out;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    const auto& table = verb_table();
    const auto it = table.find(cmd.verb);
    if (it == table.end()) {
        err << "error: unknown verb '" << cmd.verb << "'\n";
        return kUsageError;
    }
    const Verb& verb = it->second;
    if (cmd.args.size() < verb.min_args || cmd.args.size() > verb.max_args) {
        err << "usage: " << cmd.verb << " " << verb.summary << '\n';
        return kUsageError;
    }
    try {
        return verb.handler(Context{cmd, out});
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NotExact& e) {
        err << "NotExact: " << e.what() << '\n';
        if (cmd.json) out << json{{"error", "NotExact"}, {"message", e.what()}}.dump(2) << '\n';
        return kDomainError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in free Novikov algebras and the differential polynomial algebra F{X}",
                 "novlag"};
    app.footer(kGrammar);
    app.require_subcommand(1);

    Command cmd;
    std::string mode = "diff";
    for (const auto& [name, verb] : verb_table()) {
        CLI::App* sub = app.add_subcommand(name, verb.summary);
        // Positionals are taken from the leftovers; a vector option would
        // split "[x1,x2]" at the comma.
        sub->allow_extras();
        sub->add_flag("--json", cmd.json, "emit JSON");
        sub->add_option("--mode", mode, "expression syntax")
            ->check(CLI::IsMember({"diff", "nov"}))
            ->capture_default_str();
        sub->add_option("--vars", cmd.vars, "ambient variable count for Euler vectors");
        sub->add_option("--seed", cmd.seed, "random seed for self-test");
        sub->add_option("--trials", cmd.trials, "trials per self-test check")->check(CLI::PositiveNumber);
        sub->callback([&cmd, sub, name = name] {
            cmd.verb = name;
            cmd.args = sub->remaining();
            for (const auto& a : cmd.args)
                if (a.starts_with("--")) throw CLI::ExtrasError(name, {a});
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }
    cmd.mode = mode == "nov" ? Mode::nov : Mode::diff;
    return run(cmd, out, err);
}

}  // namespace novlag::cli
