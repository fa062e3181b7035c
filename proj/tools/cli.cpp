#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cobordism/classes.hpp"
#include "cobordism/fgl.hpp"
#include "cobordism/io.hpp"

namespace cobordism::cli {

namespace {

using io::json;

const std::vector<std::string> kTheorems{"l2", "ks", "lmod2", "euler", "additive", "trivial-normal", "decomposable"};
constexpr int kMaxOrder = 40;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int env_order(int fallback) {
    const char* v = std::getenv("COBORDISM_ORDER");
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const long o = std::strtol(v, &end, 10);
    if (*end != '\0' || o < 2 || o > kMaxOrder) throw UsageError(std::string("COBORDISM_ORDER must be an integer in [2, 40], got ") + v);
    return static_cast<int>(o);
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v <= 0) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad partition \"" + s + "\"");
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot read " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

json catalog_json() {
    json builtins = json::array();
    builtins.push_back({{"name", "linear_pn"},
                        {"params", {{{"name", "n"}, {"range", "n >= 1"}}, {{"name", "a"}, {"range", "0 <= a < n"}}}},
                        {"doc", "involution of P^n with eigenvalues +1 (a+1 times) and -1; fixed locus P^a + P^(n-a-1) with normal bundles (n-a)O(1) and (a+1)O(1)"}});
    builtins.push_back({{"name", "factorwise_p1n"},
                        {"params", {{{"name", "n"}, {"range", "1 <= n <= 16"}}}},
                        {"doc", "(P^1)^n with the sign involution on every factor; 2^n fixed points with trivial normal bundle of rank n"}});
    builtins.push_back({{"name", "swap_square"},
                        {"params", {{{"name", "spec"}, {"range", "connected variety spec of positive dimension"}},
                                    {{"name", "n"}, {"range", "shorthand for spec = P^n"}}}},
                        {"doc", "X x X with the factor swap; fixed locus the diagonal with normal bundle T_X"}});
    json varieties = json::array();
    varieties.push_back({{"type", "multiproj"}, {"fields", {"dims"}}, {"doc", "product of projective spaces P^d1 x ... ; empty dims is a point"}});
    varieties.push_back({{"type", "projbundle"}, {"fields", {"base", "lines", "minus_trivial"}},
                         {"doc", "P(V) for V a sum of line bundles given by c1 over the base generators, minus optional trivial summands"}});
    varieties.push_back({{"type", "product"}, {"fields", {"factors"}}, {"doc", "product of varieties"}});
    varieties.push_back({{"type", "disjoint"}, {"fields", {"components"}}, {"doc", "disjoint union"}});
    return {{"command", "catalog"}, {"builtins", builtins}, {"varieties", varieties}, {"theorems", kTheorems}};
}

std::string render_catalog(const json& c, const std::string& only) {
    std::ostringstream out;
    for (const auto& b : c.at("builtins")) {
        if (!only.empty() && b.at("name") != only) continue;
        out << b.at("name").get<std::string>() << "(";
        bool first = true;
        for (const auto& p : b.at("params")) {
            out << (first ? "" : ", ") << p.at("name").get<std::string>() << ": " << p.at("range").get<std::string>();
            first = false;
        }
        out << ")\n    " << b.at("doc").get<std::string>() << "\n";
    }
    if (only.empty()) {
        out << "variety types:\n";
        for (const auto& v : c.at("varieties")) out << "  " << v.at("type").get<std::string>() << ": " << v.at("doc").get<std::string>() << "\n";
        out << "theorems:";
        for (const auto& t : c.at("theorems")) out << " " << t.get<std::string>();
        out << "\n";
    }
    return out.str();
}

FormalGroupLaw make_law(const std::string& law, int order, long p) {
    if (law == "universal") return universal_fgl(order);
    if (law == "chx") return chx_fgl(order);
    if (law == "cha") return cha_fgl(order);
    if (law == "additive") return additive_fgl(Domain::integers(), order);
    if (law == "universal-mod-p") {
        if (p < 2) throw UsageError("universal-mod-p needs --p >= 2");
        return universal_fgl_mod(p, order);
    }
    throw UsageError("unknown law \"" + law + "\"");
}

}  // namespace

std::vector<MuTwoActionModel> catalog_actions(int max_n) {
    std::vector<MuTwoActionModel> out;
    for (int n = 1; n <= max_n; ++n) {
        for (int a = 0; a < n; ++a) out.push_back(linear_pn(n, a));
    }
    for (int n = 1; n <= max_n; ++n) out.push_back(factorwise_p1n(n));
    for (int n = 1; 2 * n <= max_n; ++n) out.push_back(swap_square(VarietySpec::projective_space(n)));
    return out;
}

Report run_theorem(const std::string& theorem, const MuTwoActionModel& action, int order, int max_m) {
    if (theorem == "l2") return verify_l2_relations(action, max_m);
    if (theorem == "ks") return verify_ks_all(action);
    if (theorem == "lmod2") return verify_lmod2(action, order);
    if (theorem == "euler") return verify_euler(action);
    if (theorem == "additive") return verify_additive(action);
    if (theorem == "trivial-normal") return verify_trivial_normal(action);
    if (theorem == "decomposable") return verify_decomposable(action);
    throw UsageError("unknown theorem \"" + theorem + "\"");
}

Report run_batch(const std::vector<MuTwoActionModel>& actions, const std::vector<std::string>& theorems, int order,
                 int max_m, unsigned jobs) {
    struct Task {
        const MuTwoActionModel* action;
        std::string theorem;
    };
    std::vector<Task> tasks;
    for (const auto& a : actions) {
        for (const auto& t : theorems) tasks.push_back({&a, t});
    }
    std::vector<Report> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            try {
                if (t.theorem == "lmod2" && t.action->dimension() > 4) {
                    Report r;
                    r.command = "verify lmod2 " + t.action->name;
                    CheckRecord skip;
                    skip.id = "lmod2";
                    skip.reference = "cobordism modulo two through x/[2](x)";
                    skip.relation = "hypothesis";
                    skip.status = Status::HypothesisNotMet;
                    skip.note = "dimension above the default bound 4";
                    r.add(skip);
                    results[i] = r;
                } else {
                    results[i] = run_theorem(t.theorem, *t.action, order, max_m);
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Report merged;
    merged.command = "verify --all";
    for (const auto& r : results) {
        for (CheckRecord rec : r.records) {
            rec.id = r.command.substr(7) + ": " + rec.id;
            merged.add(std::move(rec));
        }
    }
    return merged;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Formal group laws, algebraic cobordism and fixed-point checks for involutions", "cobordism"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    std::string out_path;
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
    app.add_option("--out", out_path, "Write output to a file");

    auto* fgl = app.add_subcommand("fgl", "Expand a formal group law");
    std::string law = "universal";
    int order = 0;
    long mult = 0;
    bool has_mult = false;
    long p = 0;
    fgl->add_option("--law", law, "universal, chx, cha, additive, universal-mod-p");
    fgl->add_option("--order", order, "Truncation order (terms of total degree < order)");
    auto* mult_opt = fgl->add_option("--mult", mult, "Also print the formal multiple [a](x)");
    fgl->add_option("--p", p, "Prime for universal-mod-p");

    auto* chern = app.add_subcommand("chern", "Chern data of a variety");
    std::string spec_text;
    std::string in_path;
    int pn = -1;
    std::string multiproj;
    std::string alpha_text;
    chern->add_option("--spec", spec_text, "Variety spec as JSON");
    chern->add_option("--in", in_path, "Read the spec from a file (- for stdin)");
    chern->add_option("--pn", pn, "Projective space P^n");
    chern->add_option("--multiproj", multiproj, "Product of projective spaces, e.g. 1,1");
    chern->add_option("--alpha", alpha_text, "Partition for an extra Chern number, e.g. 2,1");

    auto* verify = app.add_subcommand("verify", "Check fixed-point theorems on an action");
    std::string theorem;
    std::string builtin;
    int n = -1;
    int a = -1;
    std::string action_text;
    int max_m = -1;
    bool all = false;
    int max_n = 4;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    verify->add_option("--theorem", theorem, "l2, ks, lmod2, euler, additive, trivial-normal, decomposable");
    verify->add_option("--builtin", builtin, "linear_pn, factorwise_p1n, swap_square");
    verify->add_option("--n", n, "Builtin parameter n");
    verify->add_option("--a", a, "Builtin parameter a");
    verify->add_option("--action", action_text, "Action as JSON");
    verify->add_option("--in", in_path, "Read the action from a file (- for stdin)");
    verify->add_option("--alpha", alpha_text, "Single partition for the ks theorem");
    verify->add_option("--order", order, "Truncation order for lmod2");
    verify->add_option("--max-m", max_m, "Largest m for the l2 relations");
    verify->add_flag("--all", all, "Every theorem; over the builtin catalog when no action is given");
    verify->add_option("--max-n", max_n, "Largest dimension of the catalog swept by --all");
    verify->add_option("--jobs", jobs, "Worker threads for --all");

    auto* catalog = app.add_subcommand("catalog", "List builtin actions and variety constructors");
    bool as_json = false;
    catalog->add_flag("--json", as_json, "JSON output");
    catalog->add_option("--builtin", builtin, "Show one builtin");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::ostringstream text;
    int status = 0;
    try {
        if (fgl->parsed()) {
            has_mult = mult_opt->count() > 0;
            const int ord = order != 0 ? order : env_order(6);
            if (ord < 2 || ord > kMaxOrder) throw UsageError("order must be in [2, 40]");
            const FormalGroupLaw f = make_law(law, ord, p);
            std::string cmd = "fgl --law " + law + " --order " + std::to_string(ord);
            if (has_mult) cmd += " --mult " + std::to_string(mult);
            if (pretty) {
                text << cmd << "\nF(x,y) = " << f.series().to_string() << "\n";
                if (has_mult) text << "[" << mult << "](x) = " << formal_mult(f, mult).to_string() << "\n";
            } else {
                json j{{"command", cmd}, {"law", f.name()}, {"series", io::to_json(f.series())}};
                if (has_mult) j["mult"] = {{"a", mult}, {"series", io::to_json(formal_mult(f, mult))}};
                text << j.dump(2) << "\n";
            }
        } else if (chern->parsed()) {
            VarietySpec spec;
            if (!spec_text.empty()) {
                spec = io::spec_from_json(parse_json(spec_text));
            } else if (!in_path.empty()) {
                spec = io::spec_from_json(parse_json(read_input(in_path, in)));
            } else if (pn >= 0) {
                spec = VarietySpec::projective_space(pn);
            } else if (!multiproj.empty()) {
                spec = VarietySpec::multiproj(parse_partition(multiproj).parts());
            } else {
                throw UsageError("chern needs --spec, --in, --pn or --multiproj");
            }
            const int dim = spec.dimension();
            const mpz_class chi = euler_number(spec);
            const mpz_class cn = additive_chern_number(spec);
            const RingElement cls = fundamental_class(spec);
            json numbers = json::array();
            std::vector<Partition> alphas = partitions_of(dim);
            if (!alpha_text.empty()) {
                const Partition al = parse_partition(alpha_text);
                if (al.weight() != dim) throw UsageError("partition weight must equal the dimension");
                alphas = {al};
            }
            for (const Partition& al : alphas) numbers.push_back({{"alpha", al.parts()}, {"value", chern_number(spec, al).get_str()}});
            if (pretty) {
                text << "variety " << spec.to_string() << " of dimension " << dim << "\n";
                text << "euler number " << chi.get_str() << "\n";
                text << "additive chern number " << cn.get_str() << "\n";
                for (const auto& e : numbers) {
                    text << "c_" << Partition(e.at("alpha").get<std::vector<int>>()).to_string() << " = "
                         << e.at("value").get<std::string>() << "\n";
                }
                text << "class " << cls.to_string() << "\n";
            } else {
                const json j{{"command", "chern " + spec.to_string()},
                             {"spec", io::to_json(spec)},
                             {"dimension", dim},
                             {"euler", chi.get_str()},
                             {"additive", cn.get_str()},
                             {"chern_numbers", numbers},
                             {"class", io::to_json(cls)}};
                text << j.dump(2) << "\n";
            }
        } else if (verify->parsed()) {
            const int ord = order != 0 ? order : env_order(0);
            std::vector<MuTwoActionModel> actions;
            if (!builtin.empty()) {
                json params = json::object();
                if (n >= 0) params["n"] = n;
                if (a >= 0) params["a"] = a;
                if (!action_text.empty()) params["spec"] = parse_json(action_text);
                actions.push_back(io::builtin_action(builtin, params));
            } else if (!action_text.empty()) {
                actions.push_back(io::action_from_json(parse_json(action_text)));
            } else if (!in_path.empty()) {
                actions.push_back(io::action_from_json(parse_json(read_input(in_path, in))));
            } else if (all) {
                actions = catalog_actions(max_n);
            } else {
                throw UsageError("verify needs --builtin, --action, --in or --all");
            }
            Report rep;
            if (all) {
                if (!theorem.empty()) throw UsageError("--all and --theorem are exclusive");
                rep = run_batch(actions, kTheorems, ord, max_m, jobs);
            } else if (theorem.empty()) {
                throw UsageError("verify needs --theorem or --all");
            } else if (theorem == "ks" && !alpha_text.empty()) {
                rep = verify_ks(actions.front(), parse_partition(alpha_text));
            } else {
                rep = run_theorem(theorem, actions.front(), ord, max_m);
            }
            text << (pretty ? io::render(rep) : io::to_json(rep).dump(2) + "\n");
            status = rep.ok() ? 0 : 1;
        } else if (catalog->parsed()) {
            const json c = catalog_json();
            if (!builtin.empty()) {
                const auto& bs = c.at("builtins");
                const auto it = std::find_if(bs.begin(), bs.end(), [&](const json& b) { return b.at("name") == builtin; });
                if (it == bs.end()) throw UsageError("unknown builtin \"" + builtin + "\"");
                text << (as_json ? it->dump(2) + "\n" : render_catalog(c, builtin));
            } else {
                text << (as_json ? c.dump(2) + "\n" : render_catalog(c, ""));
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (out_path.empty()) {
        out << text.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << text.str();
    }
    return status;
}

}  // namespace cobordism::cli
