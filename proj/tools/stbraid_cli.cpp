// stbraid: exact computations for pseudo and singular links in the solid
// torus. Subcommands: bracket, closure, braid, reduce, markov-test,
// hecke-span, replay, catalog.
//
// Exit codes: 0 success, 1 property failure, 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stbraid/bracket.hpp"
#include "stbraid/diagram.hpp"
#include "stbraid/hecke.hpp"
#include "stbraid/markov.hpp"
#include "stbraid/span.hpp"

using namespace stbraid;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

SkeinRuleSet rules_from(const std::string& path) {
    if (path.empty()) return SkeinRuleSet::standard();
    return SkeinRuleSet::load(read_file(path));
}

BraidWord word_from(const std::string& text, const std::string& flavor, int n) {
    if (text.find('=') != std::string::npos) return parse_word_with_header(text);
    auto f = flavor_from_name(flavor);
    if (!f) throw std::invalid_argument("unknown flavor: " + flavor);
    return parse_word(text, *f, n);
}

struct CatalogEntry {
    std::string id;
    std::string kind;      // word | diagram
    std::string payload;
    std::string expected;  // normalized invariant, polynomial grammar
    std::string provenance;
};

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            auto bar = line.find('|', start);
            std::string col = line.substr(start, bar == std::string::npos
                                                      ? std::string::npos
                                                      : bar - start);
            col.erase(0, col.find_first_not_of(" \t"));
            col.erase(col.find_last_not_of(" \t") + 1);
            cols.push_back(col);
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        if (cols.size() != 5)
            throw std::invalid_argument("catalog line needs 5 columns: " + line);
        out.push_back({cols[0], cols[1], cols[2], cols[3], cols[4]});
    }
    return out;
}

int run_bracket(const std::string& word, const std::string& flavor, int n,
                bool normalized, const std::string& rules_path) {
    SkeinRuleSet rules = rules_from(rules_path);
    BraidWord w = word_from(word, flavor, n);
    Laurent v = normalized ? normalized_invariant_of_word(w, rules)
                           : bracket_of_word(w, rules);
    std::cout << v.str() << "\n";
    return 0;
}

int run_closure(const std::string& word, const std::string& flavor, int n,
                const std::string& out_path) {
    BraidWord w = word_from(word, flavor, n);
    MixedLinkDiagram d = closure(w);
    if (out_path.empty())
        std::cout << d.str();
    else
        write_file(out_path, d.str());
    return 0;
}

int run_braid(const std::string& path) {
    MixedLinkDiagram d = MixedLinkDiagram::parse(read_file(path));
    if (d.events.empty()) {
        std::cout << "n=0 components=0 word=\n";
        return 0;
    }
    auto violations = validate(d);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "invalid diagram: " << v << "\n";
        return 2;
    }
    BraidWord w = diagram_to_braid(d);
    WordStats st = stats(w);
    std::cout << w.header_str() << "\n";
    std::cout << "stats: n=" << w.n << " writhe=" << st.writhe
              << " pre_degree=" << st.pre_degree << " t_winding=" << st.t_winding
              << " components=" << component_count(closure(w)) << "\n";
    return 0;
}

int run_markov_test(const std::string& word, const std::string& flavor, int n,
                    int steps, std::uint64_t seed, const std::string& rules_path,
                    const std::string& kinds_csv, const std::string& log_path) {
    SkeinRuleSet rules = rules_from(rules_path);
    BraidWord w = word_from(word, flavor, n);
    WalkOptions opts;
    if (!kinds_csv.empty()) {
        std::istringstream is(kinds_csv);
        std::string k;
        while (std::getline(is, k, ',')) {
            auto mk = move_kind_from_name(k);
            if (!mk) throw std::invalid_argument("unknown move kind: " + k);
            opts.allowed.push_back(*mk);
        }
    }
    Laurent before = normalized_invariant_of_word(w, rules);
    WalkResult r = random_markov_walk(w, steps, seed, opts);
    Laurent after = normalized_invariant_of_word(r.word, rules);
    std::ostringstream log;
    log << "start " << w.header_str() << "\n";
    for (const auto& e : r.log) log << e.line << "\n";
    log << "end " << r.word.header_str() << "\n";
    if (!log_path.empty()) write_file(log_path, log.str());
    std::cout << "walk seed=" << seed << " steps=" << steps << "\n" << log.str();
    if (before == after) {
        std::cout << "PASS normalized invariant unchanged: " << before.str() << "\n";
        return 0;
    }
    std::cout << "FAIL before=" << before.str() << " after=" << after.str() << "\n";
    return 1;
}

int run_reduce(const std::string& word, const std::string& flavor, int n,
               int cyclotomic, bool basic) {
    BraidWord w = word_from(word, flavor, n);
    AlgebraElement e = AlgebraElement::word(w);
    bool has_special = false;
    for (const Letter& l : w.letters)
        has_special |= l.kind == LetterKind::P || l.kind == LetterKind::Tau;
    if (is_mixed(w.flavor)) {
        if (cyclotomic > 0) {
            std::vector<Laurent> u;
            if (basic) {
                if (cyclotomic != 2)
                    throw std::invalid_argument("--basic requires --cyclotomic 2");
                u = basic_typeB_parameters();
            } else {
                for (int i = 1; i <= cyclotomic; ++i)
                    u.push_back(Laurent::var_u(i, cyclotomic));
            }
            e = cyclotomic_reduce(e, cyclotomic, u);
        }
        std::cout << e.str() << "\n";
        return 0;
    }
    e = has_special ? reduce_pseudo_typeA(e) : reduce_typeA(e);
    std::cout << e.str() << "\n";
    return 0;
}

int run_hecke_span(const std::string& kind_name, int n, int d, int kmax,
                   int length_bound, int budget, bool closure_typeA,
                   const std::string& out_path, const std::string& certs_dir) {
    SpanReport rep;
    if (closure_typeA) {
        rep = span_closure_typeA(n, d);
    } else {
        auto kind = span_kind_from_name(kind_name);
        if (!kind) throw std::invalid_argument("unknown spanning-set kind: " + kind_name);
        rep = span_experiment(*kind, n, d, kmax, length_bound, budget);
    }
    std::string table = rep.str();
    if (!out_path.empty())
        write_file(out_path, table);
    else
        std::cout << table;
    if (!certs_dir.empty()) {
        std::filesystem::create_directories(certs_dir);
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            if (rep.rows[i].certificate.empty()) continue;
            Flavor f = rep.rows[i].member.find('t') != std::string::npos ||
                               kind_name.find("typeB") != std::string::npos
                           ? Flavor::PM_1n
                           : Flavor::PM_n;
            std::ostringstream cert;
            cert << "cert flavor=" << flavor_name(f) << " n=" << n << "; "
                 << rep.rows[i].member << " * " << rep.rows[i].generator << "\n"
                 << rep.rows[i].certificate;
            write_file(certs_dir + "/cert-" + std::to_string(i) + ".txt", cert.str());
        }
    }
    return 0;
}

int run_replay(const std::string& path) {
    std::istringstream is(read_file(path));
    std::string first;
    if (!std::getline(is, first)) throw std::invalid_argument("empty replay file");
    if (first.rfind("start ", 0) == 0) {
        // markov walk log
        BraidWord w = parse_word_with_header(first.substr(6));
        std::string line;
        std::string claimed_end;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (line.rfind("end ", 0) == 0) {
                claimed_end = line.substr(4);
                break;
            }
            w = apply_move_log_entry(w, line);
        }
        std::cout << w.header_str() << "\n";
        if (!claimed_end.empty()) {
            BraidWord end = parse_word_with_header(claimed_end);
            if (!(end == w)) {
                std::cout << "FAIL replay diverges from the logged end word\n";
                return 1;
            }
            std::cout << "PASS replay matches the logged end word\n";
        }
        return 0;
    }
    if (first.rfind("cert ", 0) == 0) {
        // "cert flavor=F n=N; <member> * <generator>"
        auto semi = first.find(';');
        if (semi == std::string::npos) throw std::invalid_argument("bad cert header");
        BraidWord probe = parse_word_with_header(first.substr(5, semi - 5) + ";");
        std::string prod = first.substr(semi + 1);
        auto star = prod.find('*');
        if (star == std::string::npos) throw std::invalid_argument("bad cert product");
        std::string ms = prod.substr(0, star), gs = prod.substr(star + 1);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        ms = trim(ms);
        gs = trim(gs);
        BraidWord m = ms == "1" ? BraidWord(probe.flavor, probe.n)
                                : parse_word(ms, probe.flavor, probe.n);
        BraidWord g = parse_word(gs, probe.flavor, probe.n);
        std::ostringstream rest;
        rest << is.rdbuf();
        AlgebraElement start = AlgebraElement::word(free_reduce(concat(m, g)));
        AlgebraElement end = replay_certificate(start, rest.str());
        std::cout << end.str() << "\n";
        return 0;
    }
    throw std::invalid_argument("replay file must start with 'start ' or 'cert '");
}

int run_catalog_verify(const std::string& path, const std::string& rules_path) {
    SkeinRuleSet rules = rules_from(rules_path);
    auto entries = parse_catalog(read_file(path));
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    int failures = 0;
    for (const CatalogEntry& e : entries) {
        Laurent expected = Laurent::parse(e.expected);
        Laurent got;
        if (e.kind == "word") {
            got = normalized_invariant_of_word(parse_word_with_header(e.payload), rules);
        } else if (e.kind == "diagram") {
            MixedLinkDiagram d =
                MixedLinkDiagram::parse(read_file((base / e.payload).string()));
            got = normalized_invariant(d, rules);
        } else {
            throw std::invalid_argument("unknown catalog kind: " + e.kind);
        }
        bool ok = got == expected;
        failures += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << e.id << " [" << e.provenance << "]";
        if (!ok) std::cout << " expected=" << expected.str() << " got=" << got.str();
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "catalog OK" : "catalog FAILURES") << " ("
              << entries.size() - failures << "/" << entries.size() << ")\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact braid-monoid, skein and Hecke computations for pseudo and "
                 "singular links in the solid torus"};
    app.require_subcommand(1);

    std::string word, flavor = "PM_1n", rules_path, out_path, diagram_path, kinds_csv;
    std::string kind_name = "C_d_prime_typeB", catalog_path, replay_path, certs_dir;
    std::string log_path;
    int n = 1, steps = 10, d = 0, kmax = 1, length_bound = 12, budget = 20000;
    int cyclotomic = 0;
    std::uint64_t seed = 0;
    bool normalized = false, basic = false, closure_typeA = false;

    auto* cb = app.add_subcommand("bracket", "pseudo bracket of a braid word closure");
    cb->add_option("word", word)->required();
    cb->add_option("--flavor", flavor);
    cb->add_option("--n", n);
    cb->add_flag("--normalized", normalized);
    cb->add_option("--rules", rules_path);

    auto* cc = app.add_subcommand("closure", "emit the closure diagram of a word");
    cc->add_option("word", word)->required();
    cc->add_option("--flavor", flavor);
    cc->add_option("--n", n);
    cc->add_option("--out", out_path);

    auto* cd = app.add_subcommand("braid", "braid a diagram file");
    cd->add_option("diagram", diagram_path)->required();

    auto* cm = app.add_subcommand("markov-test",
                                  "random Markov walk; compare normalized invariants");
    cm->add_option("word", word)->required();
    cm->add_option("--flavor", flavor);
    cm->add_option("--n", n);
    cm->add_option("--steps", steps);
    cm->add_option("--seed", seed);
    cm->add_option("--kinds", kinds_csv);
    cm->add_option("--rules", rules_path);
    cm->add_option("--log", log_path);

    auto* cr = app.add_subcommand("reduce", "Hecke-type reduction of a word");
    cr->add_option("word", word)->required();
    cr->add_option("--flavor", flavor);
    cr->add_option("--n", n);
    cr->add_option("--cyclotomic", cyclotomic);
    cr->add_flag("--basic", basic);

    auto* ch = app.add_subcommand("hecke-span", "spanning-set experiments");
    ch->add_option("--kind", kind_name);
    ch->add_option("--n", n)->required();
    ch->add_option("--d", d);
    ch->add_option("--kmax", kmax);
    ch->add_option("--length-bound", length_bound);
    ch->add_option("--budget", budget);
    ch->add_flag("--closure-typeA", closure_typeA);
    ch->add_option("--out", out_path);
    ch->add_option("--certs", certs_dir);

    auto* cp = app.add_subcommand("replay", "replay a walk log or certificate");
    cp->add_option("file", replay_path)->required();

    auto* cv = app.add_subcommand("catalog", "catalog operations");
    auto* cvv = cv->add_subcommand("verify", "recompute and check expected invariants");
    cvv->add_option("file", catalog_path)->required();
    cvv->add_option("--rules", rules_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cb->parsed()) return run_bracket(word, flavor, n, normalized, rules_path);
        if (cc->parsed()) return run_closure(word, flavor, n, out_path);
        if (cd->parsed()) return run_braid(diagram_path);
        if (cm->parsed())
            return run_markov_test(word, flavor, n, steps, seed, rules_path, kinds_csv,
                                   log_path);
        if (cr->parsed()) return run_reduce(word, flavor, n, cyclotomic, basic);
        if (ch->parsed())
            return run_hecke_span(kind_name, n, d, kmax, length_bound, budget,
                                  closure_typeA, out_path, certs_dir);
        if (cp->parsed()) return run_replay(replay_path);
        if (cv->parsed() && cvv->parsed())
            return run_catalog_verify(catalog_path, rules_path);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
