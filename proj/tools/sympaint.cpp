#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <sympaint/aut_search.hpp>
#include <sympaint/families.hpp>
#include <sympaint/formulas.hpp>
#include <sympaint/graph_io.hpp>
#include <sympaint/params.hpp>
#include <sympaint/perm_group.hpp>
#include <sympaint/report_json.hpp>

namespace {

using nlohmann::json;
using namespace sympaint;

// Well-formed request for something this tool does not do (exit code 4).
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphInput {
    std::string g6, g6_file, edges_file, family;
};

void add_graph_options(CLI::App* sub, GraphInput& in) {
    sub->add_option("--g6", in.g6, "inline graph6 text");
    sub->add_option("--g6-file", in.g6_file, "file holding one graph6 line");
    sub->add_option("--edges", in.edges_file, "file holding an edge list (first line: n m)");
    sub->add_option("--family", in.family,
                    "family spec: cycle:m, complete:n, complete_bipartite:a,b, "
                    "hypercube:k, book:m,n, asymmetric6");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedGraph {
    Graph graph;
    std::string family;  // spec echo when built from a family
};

LoadedGraph load_graph(const GraphInput& in) {
    int sources = !in.g6.empty() + !in.g6_file.empty() + !in.edges_file.empty() +
                  !in.family.empty();
    if (sources != 1)
        throw DomainError("give exactly one of --g6, --g6-file, --edges, --family");
    if (!in.g6.empty()) return {parse_graph6(in.g6), ""};
    if (!in.g6_file.empty()) return {parse_graph6(slurp(in.g6_file)), ""};
    if (!in.edges_file.empty()) return {parse_edge_list(slurp(in.edges_file)), ""};
    auto fam = make_family(in.family);
    return {std::move(fam.graph), fam.name};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos
                                                                 : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

// Vertices by label or index; ';' separates when labels contain commas.
std::vector<int> parse_vertex_list(const Graph& g, const std::string& text) {
    if (text.empty()) throw DomainError("empty vertex list");
    char sep = text.find(';') != std::string::npos ? ';' : ',';
    std::vector<int> out;
    for (const auto& tok : split(text, sep)) {
        if (tok.empty()) throw DomainError("empty vertex token");
        int byname = g.find_label(tok);
        if (byname >= 0) {
            out.push_back(byname);
            continue;
        }
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("'" + tok + "' is neither a label nor an index");
        long long v = std::stoll(tok);
        if (v < 0 || v >= g.vertex_count())
            throw DomainError("vertex index " + tok + " out of range");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("'" + tok + "' is not a nonnegative integer");
        out.push_back(static_cast<int>(std::stoll(tok)));
    }
    return out;
}

// "a,b,c" or "a-b" (inclusive).
std::vector<long long> parse_range(const std::string& text) {
    std::size_t dash = text.find('-');
    if (dash != std::string::npos && dash > 0) {
        std::string lo = text.substr(0, dash), hi = text.substr(dash + 1);
        if (lo.find_first_not_of("0123456789") != std::string::npos ||
            hi.empty() || hi.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("range must be a-b with integers");
        std::vector<long long> out;
        for (long long v = std::stoll(lo); v <= std::stoll(hi); ++v) out.push_back(v);
        if (out.empty()) throw DomainError("empty range '" + text + "'");
        return out;
    }
    std::vector<long long> out;
    for (int v : parse_int_list(text)) out.push_back(v);
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json permutation_json(const Permutation& p) { return json(p.images()); }

int run_analyze(const GraphInput& in, const SearchOptions& opts, bool witnesses) {
    auto loaded = load_graph(in);
    auto report = full_report(loaded.graph, opts);
    emit(report_to_json(report, loaded.graph, loaded.family, witnesses));
    return report.complete ? 0 : 3;
}

int run_family(const GraphInput& in, const std::string& format) {
    if (in.family.empty()) throw DomainError("family subcommand needs --family");
    auto loaded = load_graph(in);
    if (format == "g6")
        std::cout << emit_graph6(loaded.graph) << "\n";
    else if (format == "edges")
        std::cout << emit_edge_list(loaded.graph);
    else
        throw Unsupported("unknown output format '" + format + "'");
    return 0;
}

int run_group(const GraphInput& in) {
    auto loaded = load_graph(in);
    auto aut = automorphism_group(loaded.graph);
    json j;
    j["degree"] = aut.degree();
    j["order"] = aut.order().str();
    j["base"] = aut.base();
    j["orbits"] = aut.orbits();
    json gens = json::array();
    for (const auto& g : aut.generators()) gens.push_back(permutation_json(g));
    j["generators"] = std::move(gens);
    emit(j);
    return 0;
}

int run_check_coloring(const GraphInput& in, const std::string& colors) {
    auto loaded = load_graph(in);
    auto a = parse_int_list(colors);
    int d = 0;
    for (int c : a) d = std::max(d, c + 1);
    Coloring c(a, std::max(d, 1));
    c.check_total(loaded.graph);
    auto preserving = automorphism_group(loaded.graph, c);
    json j;
    j["distinguishing"] = preserving.is_trivial();
    if (preserving.is_trivial())
        j["witness_automorphism"] = nullptr;
    else
        j["witness_automorphism"] = permutation_json(preserving.generators().front());
    emit(j);
    return 0;
}

int run_check_set(const GraphInput& in, const std::string& set_text,
                  const std::string& colors) {
    auto loaded = load_graph(in);
    auto s = parse_vertex_list(loaded.graph, set_text);
    auto stab = automorphism_group(loaded.graph).pointwise_stabilizer(s);
    json j;
    j["set"] = s;
    j["determining"] = stab.is_trivial();
    if (stab.is_trivial())
        j["witness_automorphism"] = nullptr;
    else
        j["witness_automorphism"] = permutation_json(stab.generators().front());
    if (!colors.empty()) {
        auto pattern = parse_int_list(colors);
        auto violation = set_distinguishing_violation(loaded.graph, s, pattern);
        j["set_distinguishing"] = !violation.has_value();
        j["set_witness_automorphism"] =
            violation ? permutation_json(*violation) : json(nullptr);
    }
    emit(j);
    return 0;
}

std::string paint_str(const PaintCostValue& pc) { return pc.str(); }

int run_table(const std::string& family, const std::string& m_text,
              const std::string& n_text, long long d, std::string params_text,
              const std::string& format) {
    if (format != "csv" && format != "markdown")
        throw Unsupported("unknown table format '" + format + "'");
    bool book = family == "book";
    if (!book && family != "product")
        throw Unsupported("tables exist for --family book and --family product");
    if (params_text.empty())
        params_text = book ? "vertices,det,dist,fdist,rho" : "dist,paint2,det,fdist";
    auto params = split(params_text, ',');
    const std::vector<std::string> book_params_known{"vertices", "det", "dist",
                                                     "fdist", "rho"};
    const std::vector<std::string> product_params_known{"dist", "paint2", "det",
                                                        "fdist"};
    const auto& known = book ? book_params_known : product_params_known;
    for (const auto& p : params)
        if (std::find(known.begin(), known.end(), p) == known.end())
            throw Unsupported("unknown table parameter '" + p + "'");

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    std::vector<std::string> footnotes;

    if (book) {
        if (m_text.empty() || n_text.empty())
            throw DomainError("book tables need --m and --n");
        header.push_back("m");
        header.push_back("n");
        for (const auto& p : params) header.push_back(p == "rho" ? "rho_d" : p);
        header.push_back("notes");
        for (long long m : parse_range(m_text))
            for (long long n : parse_range(n_text)) {
                auto bp = book_params(static_cast<int>(m), n, d);
                std::vector<std::string> row{std::to_string(m), std::to_string(n)};
                for (const auto& p : params) {
                    if (p == "vertices") row.push_back(std::to_string(bp.vertices));
                    if (p == "det") row.push_back(std::to_string(bp.det));
                    if (p == "dist") row.push_back(std::to_string(bp.dist));
                    if (p == "fdist") row.push_back(std::to_string(bp.fdist));
                    if (p == "rho") row.push_back("d=" + std::to_string(bp.d) + ": " +
                                                  paint_str(bp.paint));
                }
                std::string note;
                for (const auto& nt : bp.notes) {
                    if (format == "markdown") {
                        footnotes.push_back(nt);
                        note += "[^" + std::to_string(footnotes.size()) + "]";
                    } else {
                        if (!note.empty()) note += "; ";
                        note += nt;
                    }
                }
                row.push_back(note);
                rows.push_back(std::move(row));
            }
    } else {
        if (m_text.empty()) throw DomainError("product tables need --m");
        header.push_back("m");
        header.push_back("q");
        for (const auto& p : params) header.push_back(p);
        for (long long m : parse_range(m_text)) {
            auto pp = product_params(static_cast<int>(m));
            std::vector<std::string> row{std::to_string(m), pp.q.str()};
            for (const auto& p : params) {
                if (p == "dist") row.push_back(std::to_string(pp.dist));
                if (p == "paint2") row.push_back(pp.paint2.str());
                if (p == "det") row.push_back(pp.det.str());
                if (p == "fdist") row.push_back(pp.fdist.str());
            }
            rows.push_back(std::move(row));
        }
    }

    if (format == "csv") {
        auto csv_cell = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += '"';
                out += c;
            }
            return out + "\"";
        };
        for (std::size_t i = 0; i < header.size(); ++i)
            std::cout << (i ? "," : "") << csv_cell(header[i]);
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << csv_cell(row[i]);
            std::cout << "\n";
        }
    } else {
        auto line = [](const std::vector<std::string>& cells) {
            std::string out = "|";
            for (const auto& c : cells) out += " " + c + " |";
            return out;
        };
        std::cout << line(header) << "\n|";
        for (std::size_t i = 0; i < header.size(); ++i) std::cout << " --- |";
        std::cout << "\n";
        for (const auto& row : rows) std::cout << line(row) << "\n";
        for (std::size_t i = 0; i < footnotes.size(); ++i)
            std::cout << "\n[^" << i + 1 << "]: " << footnotes[i];
        if (!footnotes.empty()) std::cout << "\n";
    }
    return 0;
}

int run_verify_books(const std::string& m_text, const std::string& n_text,
                     const SearchOptions& opts) {
    if (m_text.empty() || n_text.empty())
        throw DomainError("verify-books needs --m and --n");
    int mismatches = 0, checked = 0, skipped = 0;
    std::cout << "m,n,parameter,engine,formula,match\n";
    auto row = [&](long long m, long long n, const std::string& param,
                   const std::string& engine, const std::string& formula, bool ok) {
        std::cout << m << "," << n << "," << param << "," << engine << "," << formula
                  << "," << (ok ? "yes" : "NO") << "\n";
        ++checked;
        if (!ok) ++mismatches;
    };
    for (long long m : parse_range(m_text))
        for (long long n : parse_range(n_text)) {
            auto built = make_book(static_cast<int>(m), n);
            ParamReport rep = full_report(built.graph, opts);
            if (!rep.complete) {
                std::cout << m << "," << n << ",all,skipped,skipped,skipped\n";
                ++skipped;
                continue;
            }
            row(m, n, "dist", std::to_string(rep.dist),
                std::to_string(book_dist(static_cast<int>(m), n)),
                rep.dist == book_dist(static_cast<int>(m), n));
            row(m, n, "det", std::to_string(rep.det),
                std::to_string(book_det(static_cast<int>(m), n)),
                rep.det == book_det(static_cast<int>(m), n));
            row(m, n, "fdist", std::to_string(rep.fdist),
                std::to_string(book_fdist(static_cast<int>(m), n)),
                rep.fdist == book_fdist(static_cast<int>(m), n));
            for (const auto& [d, pc] : rep.paint_cost) {
                auto formula = book_paint_cost(static_cast<int>(m), n, d);
                row(m, n, "rho^" + std::to_string(d), std::to_string(pc),
                    formula.str(), formula.contains(pc));
            }
        }
    std::cout << "# " << checked << " checks, " << mismatches << " mismatches, "
              << skipped << " skipped\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetry parameters of finite graphs: distinguishing and "
                 "determining numbers, paint costs, cost numbers"};
    app.require_subcommand(1);

    std::uint64_t budget = 100'000'000;
    if (const char* env = std::getenv("SYMPAINT_BUDGET")) {
        try {
            budget = std::stoull(env);
        } catch (...) {
            std::cerr << "error: SYMPAINT_BUDGET is not an integer\n";
            return 2;
        }
    }
    int jobs = 1;
    app.add_option("--budget", budget,
                   "candidate budget per search (default 1e8 or SYMPAINT_BUDGET)");
    app.add_option("--jobs", jobs, "worker threads (searches currently run on one)")
        ->check(CLI::PositiveNumber);

    GraphInput analyze_in, family_in, group_in, cc_in, cs_in;
    bool no_witness = false;
    std::string family_format = "g6";
    std::string cc_colors, cs_set, cs_colors;
    std::string tb_family, tb_m, tb_n, tb_params, tb_format = "csv";
    long long tb_d = 0;
    std::string vb_m, vb_n;

    auto* analyze = app.add_subcommand("analyze", "full parameter report as JSON");
    add_graph_options(analyze, analyze_in);
    analyze->add_flag("--no-witness", no_witness, "omit witness colorings and sets");

    auto* family = app.add_subcommand("family", "emit a family graph");
    add_graph_options(family, family_in);
    family->add_option("--format", family_format, "g6 or edges");

    auto* group = app.add_subcommand("group", "automorphism group summary as JSON");
    add_graph_options(group, group_in);

    auto* cc = app.add_subcommand("check-coloring", "test a coloring for the "
                                                    "distinguishing property");
    add_graph_options(cc, cc_in);
    cc->add_option("--colors", cc_colors, "comma list, one color per vertex")
        ->required();

    auto* cs = app.add_subcommand("check-set", "test a vertex set (determining; "
                                               "optionally set distinguishing)");
    add_graph_options(cs, cs_in);
    cs->add_option("--set", cs_set,
                   "comma (or ';' when labels contain commas) list of labels or indices")
        ->required();
    cs->add_option("--colors", cs_colors, "comma list aligned with --set");

    auto* table = app.add_subcommand("table", "closed-form parameter tables");
    table->add_option("--family", tb_family, "book or product")->required();
    table->add_option("--m", tb_m, "values: a,b,c or a-b");
    table->add_option("--n", tb_n, "values: a,b,c or a-b (book only)");
    table->add_option("--d", tb_d, "color count for rho (book only, default dist)");
    table->add_option("--params", tb_params, "columns to include");
    table->add_option("--format", tb_format, "csv or markdown");

    auto* vb = app.add_subcommand("verify-books",
                                  "search engine vs closed forms on a book range");
    vb->add_option("--m", vb_m, "values: a,b,c or a-b")->required();
    vb->add_option("--n", vb_n, "values: a,b,c or a-b")->required();

    // --budget and --jobs live on the top app; let them appear after the
    // subcommand name too
    for (CLI::App* sub : {analyze, family, group, cc, cs, table, vb})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    SearchOptions opts;
    opts.budget = budget;
    try {
        if (analyze->parsed()) return run_analyze(analyze_in, opts, !no_witness);
        if (family->parsed()) return run_family(family_in, family_format);
        if (group->parsed()) return run_group(group_in);
        if (cc->parsed()) return run_check_coloring(cc_in, cc_colors);
        if (cs->parsed()) return run_check_set(cs_in, cs_set, cs_colors);
        if (table->parsed())
            return run_table(tb_family, tb_m, tb_n, tb_d, tb_params, tb_format);
        if (vb->parsed()) return run_verify_books(vb_m, vb_n, opts);
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 4;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
