// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qwalk: enumerate graph structures, build quantum walks and tabulate
// their average mixing statistics.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "qwalk/errors.h"
#include "qwalk/experiments.h"
#include "qwalk/graph6.h"
#include "qwalk/report.h"

namespace {

using namespace qwalk;

enum class Format { kCsv, kJson };

struct Common {
    std::string graph;
    std::string format = "csv";
    std::string out;
};

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// "--graph G" takes a graph6 string, or "@path" to read the first non-empty line of a file.
std::string load_graph6(const std::string &arg) {
    if (arg.empty() || arg[0] != '@') {
        return trim(arg);
    }
    std::ifstream in(arg.substr(1));
    if (!in) {
        throw ParameterError("cannot open " + arg.substr(1));
    }
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty()) {
            return line;
        }
    }
    throw ParseError("no graph in " + arg.substr(1), 0);
}

Format parse_format(const std::string &s) {
    if (s == "csv") {
        return Format::kCsv;
    }
    if (s == "json") {
        return Format::kJson;
    }
    throw ParameterError("unknown format '" + s + "'");
}

Arc parse_arc(const std::string &s) {
    std::string t = s;
    for (char &c : t) {
        if (c == '(' || c == ')' || c == ',') {
            c = ' ';
        }
    }
    std::istringstream in(t);
    Arc a{-1, -1};
    std::string rest;
    if (!(in >> a.tail >> a.head) || (in >> rest)) {
        throw ParameterError("expected an arc 'u,v', got '" + s + "'");
    }
    return a;
}

class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw ParameterError("cannot write " + path);
            }
        }
    }
    std::ostream &stream() {
        return file_.is_open() ? file_ : std::cout;
    }

   private:
    std::ofstream file_;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--graph", c.graph, "graph6 string, or @FILE")->required();
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out, "write to PATH instead of stdout");
}

void run_embeddings_cmd(const Common &c, const std::string &coin, bool group, bool raw) {
    std::string g6 = load_graph6(c.graph);
    Graph g = parse_graph6(g6);
    auto rows = run_embeddings(g, parse_coin_kind(coin));
    auto groups = group_by_genus_and_trace(rows);
    Output out(c.out);
    if (parse_format(c.format) == Format::kJson) {
        nlohmann::json j = {
            {"graph6", g6},
            {"coin", coin},
            {"count", rows.size()},
            {"groups", trace_groups_json(groups)},
            {"monotonicity", monotonicity_json(monotonicity_report(rows))},
        };
        if (!group) {
            j["rows"] = embeddings_json(rows);
        }
        out.stream() << j.dump(2) << '\n';
        return;
    }
    if (group) {
        write_trace_groups_csv(out.stream(), groups);
    } else {
        write_embeddings_csv(out.stream(), rows, raw);
    }
}

void run_shunts_cmd(const Common &c, const std::string &coin, bool group, bool raw) {
    std::string g6 = load_graph6(c.graph);
    Graph g = parse_graph6(g6);
    auto rows = run_shunts(g, parse_coin_kind(coin));
    auto groups = group_by_signature(rows);
    Output out(c.out);
    if (parse_format(c.format) == Format::kJson) {
        nlohmann::json j = {
            {"graph6", g6},
            {"coin", coin},
            {"count", rows.size()},
            {"groups", signature_groups_json(groups)},
            {"symmetric_max", symmetric_max_json(symmetric_max_check(rows))},
        };
        if (!group) {
            j["rows"] = shunts_json(rows);
        }
        out.stream() << j.dump(2) << '\n';
        return;
    }
    if (group) {
        write_signature_groups_csv(out.stream(), groups);
    } else {
        write_shunts_csv(out.stream(), rows, raw);
    }
}

struct WalkArgs {
    std::string model = "arc-reversal";
    std::string coin = "circulant7";
    std::optional<uint64_t> structure;
    std::optional<std::string> rotation;
    std::optional<std::string> shunts;
};

void add_walk_args(CLI::App *cmd, WalkArgs &w) {
    cmd->add_option("--model", w.model, "arc-reversal, shunt or szegedy");
    cmd->add_option("--coin", w.coin, "grover, fourier, circulant7 or gauss");
    cmd->add_option("--structure", w.structure, "enumeration index of the rotation system or decomposition");
    cmd->add_option("--rotation", w.rotation, "explicit rotation system, e.g. '0:(1,2,3) 1:(0,2,3) ...'");
    cmd->add_option("--shunts", w.shunts, "explicit shunt decomposition, e.g. '{(0,1)(2,3), (0,2)(1,3), (0,3)(1,2)}'");
}

SelectedWalk select_walk(const Graph &g, const WalkArgs &w) {
    WalkSelection sel;
    sel.model = parse_walk_model(w.model);
    sel.coin = parse_coin_kind(w.coin);
    sel.structure_index = w.structure;
    int given = (w.structure ? 1 : 0) + (w.rotation ? 1 : 0) + (w.shunts ? 1 : 0);
    if (given > 1) {
        throw ParameterError("give at most one of --structure, --rotation, --shunts");
    }
    if (w.rotation) {
        if (sel.model != WalkModel::kArcReversal) {
            throw ParameterError("--rotation needs --model arc-reversal");
        }
        sel.structure_text = w.rotation;
    }
    if (w.shunts) {
        if (sel.model != WalkModel::kShunt) {
            throw ParameterError("--shunts needs --model shunt");
        }
        sel.structure_text = w.shunts;
    }
    return build_selected_walk(g, sel);
}

void run_mix_cmd(const Common &c, const WalkArgs &w, std::optional<int> horizon) {
    std::string g6 = load_graph6(c.graph);
    Graph g = parse_graph6(g6);
    auto walk = select_walk(g, w);
    auto sd = spectral_decomposition(walk.unitary);
    auto mix = average_mixing_matrix(sd);
    Output out(c.out);
    std::optional<double> deviation;
    if (horizon) {
        deviation = (time_averaged_mixing(walk.unitary.matrix, *horizon) - mix.matrix).cwiseAbs().maxCoeff();
    }
    if (parse_format(c.format) == Format::kJson) {
        nlohmann::json j = {
            {"model", walk_model_name(parse_walk_model(w.model))},
            {"graph6", g6},
            {"structure_id", walk.structure_id},
            {"structure", walk.structure},
            {"basis", walk.unitary.labels()},
            {"summary", mixing_summary_json(summarize(sd, mix))},
            {"column_entropies", mix.column_entropies},
            {"matrix", nlohmann::json::array()},
        };
        for (int i = 0; i < mix.matrix.rows(); i++) {
            std::vector<double> row(mix.matrix.cols());
            for (int k = 0; k < mix.matrix.cols(); k++) {
                row[k] = mix.matrix(i, k);
            }
            j["matrix"].push_back(row);
        }
        if (deviation) {
            j["time_average"] = {{"horizon", *horizon}, {"max_deviation", *deviation}};
        }
        out.stream() << j.dump(2) << '\n';
        return;
    }
    write_matrix_csv(out.stream(), mix.matrix, walk.unitary.labels());
}

void run_hit_cmd(const Common &c, const WalkArgs &w, const std::string &from, const std::string &to, double eps,
                 std::optional<int> k_max) {
    std::string g6 = load_graph6(c.graph);
    Graph g = parse_graph6(g6);
    auto walk = select_walk(g, w);
    Arc x = parse_arc(from);
    Arc y = parse_arc(to);
    HitRecord rec;
    rec.model = walk_model_name(parse_walk_model(w.model));
    rec.graph6 = g6;
    rec.structure_id = walk.structure_id;
    rec.x = format_arc(x);
    rec.y = format_arc(y);
    rec.eps = eps;
    rec.hitting = hitting_summary(walk.unitary, walk.unitary.state_of(x.tail, x.head),
                                  walk.unitary.state_of(y.tail, y.head), eps, k_max);
    Output out(c.out);
    auto j = hit_record_json(rec);
    if (parse_format(c.format) == Format::kJson) {
        out.stream() << j.dump(2) << '\n';
        return;
    }
    auto opt = [](const std::optional<int> &v) { return v ? std::to_string(*v) : std::string(); };
    out.stream() << "model,graph6,structure_id,x,y,eps,one_shot,concurrent,expected,stop_mass,converged\n";
    out.stream() << rec.model << ',' << csv_field(rec.graph6) << ',' << rec.structure_id << ','
                 << csv_field(rec.x) << ',' << csv_field(rec.y) << ',' << format_full(eps) << ','
                 << opt(rec.hitting.one_shot) << ',' << opt(rec.hitting.concurrent) << ','
                 << format_full(rec.hitting.expected.value) << ',' << format_full(rec.hitting.expected.stop_mass)
                 << ',' << (rec.hitting.expected.converged ? "true" : "false") << '\n';
}

void run_szegedy_cmd(const Common &c, const std::string &from, const std::string &to, double eps,
                     std::optional<int> k_max, const std::string &order, bool with_matrix) {
    std::string g6 = load_graph6(c.graph);
    Graph g = parse_graph6(g6);
    ReflectionOrder ord = order == "R1R2" ? ReflectionOrder::kR1R2 : ReflectionOrder::kR2R1;
    Arc x = parse_arc(from);
    Arc y = parse_arc(to);
    auto report = run_szegedy(g, x, y, eps, ord, k_max);
    Output out(c.out);
    auto j = szegedy_json(report, g6);
    if (with_matrix) {
        j["matrix"] = complex_matrix_json(szegedy_unitary(MarkovChain::simple_random_walk(g), ord));
    }
    if (parse_format(c.format) == Format::kJson) {
        out.stream() << j.dump(2) << '\n';
        return;
    }
    auto &os = out.stream();
    auto opt = [](const std::optional<int> &v) { return v ? std::to_string(*v) : std::string(); };
    os << "key,value\n";
    os << "graph6," << csv_field(g6) << '\n';
    os << "order," << order << '\n';
    os << "dim," << report.dim << '\n';
    os << "support," << report.support << '\n';
    os << "unitarity_error," << format_full(report.unitarity_error) << '\n';
    os << "trace," << format_full(report.mixing.trace) << '\n';
    os << "total_entropy," << format_full(report.mixing.total_entropy) << '\n';
    os << "walk_regular," << (report.mixing.walk_regular ? "true" : "false") << '\n';
    os << "uniform," << (report.mixing.uniform ? "true" : "false") << '\n';
    os << "from," << csv_field(format_arc(x)) << '\n';
    os << "to," << csv_field(format_arc(y)) << '\n';
    os << "eps," << format_full(eps) << '\n';
    os << "one_shot," << opt(report.hitting.one_shot) << '\n';
    os << "concurrent," << opt(report.hitting.concurrent) << '\n';
    os << "expected," << format_full(report.hitting.expected.value) << '\n';
    os << "stop_mass," << format_full(report.hitting.expected.stop_mass) << '\n';
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum walks on graph embeddings and shunt decompositions"};
    app.require_subcommand(1);

    Common common;
    bool group = false;
    bool raw = false;

    auto *emb = app.add_subcommand("embeddings", "arc-reversal walks of every rotation system");
    add_common(emb, common);
    std::string emb_coin = "circulant7";
    emb->add_option("--coin", emb_coin, "coin kind");
    emb->add_flag("--group", group, "print the (genus, trace, count) view");
    emb->add_flag("--raw", raw, "17 significant digits instead of 6 decimals");

    auto *sh = app.add_subcommand("shunts", "shunt walks of every shunt decomposition");
    add_common(sh, common);
    std::string sh_coin = "gauss";
    sh->add_option("--coin", sh_coin, "coin kind");
    sh->add_flag("--group", group, "print the per-signature view");
    sh->add_flag("--raw", raw, "17 significant digits instead of 6 decimals");

    std::string from, to, order = "R2R1";
    double eps = 0.1;
    std::optional<int> k_max;
    bool with_matrix = false;
    auto *sz = app.add_subcommand("szegedy", "two-reflection walk of the simple random walk");
    add_common(sz, common);
    sz->add_option("--from", from, "start state u,v")->required();
    sz->add_option("--to", to, "target state u,v")->required();
    sz->add_option("--eps", eps, "hitting threshold");
    sz->add_option("--kmax", k_max, "step limit (default 10 l^2)");
    sz->add_option("--order", order, "R2R1 or R1R2")->check(CLI::IsMember({"R2R1", "R1R2"}));
    sz->add_flag("--matrix", with_matrix, "include the unitary");

    WalkArgs mix_walk;
    std::optional<int> horizon;
    auto *mix = app.add_subcommand("mix", "average mixing matrix of one walk");
    add_common(mix, common);
    add_walk_args(mix, mix_walk);
    mix->add_option("--horizon", horizon, "also report the deviation of the K-step average");

    WalkArgs hit_walk;
    auto *hit = app.add_subcommand("hit", "hitting times between two states of one walk");
    add_common(hit, common);
    add_walk_args(hit, hit_walk);
    hit->add_option("--from", from, "start state u,v")->required();
    hit->add_option("--to", to, "target state u,v")->required();
    hit->add_option("--eps", eps, "hitting threshold");
    hit->add_option("--kmax", k_max, "step limit (default 10 l^2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*emb) {
            run_embeddings_cmd(common, emb_coin, group, raw);
        } else if (*sh) {
            run_shunts_cmd(common, sh_coin, group, raw);
        } else if (*sz) {
            run_szegedy_cmd(common, from, to, eps, k_max, order, with_matrix);
        } else if (*mix) {
            run_mix_cmd(common, mix_walk, horizon);
        } else if (*hit) {
            run_hit_cmd(common, hit_walk, from, to, eps, k_max);
        }
    } catch (const ParseError &e) {
        std::cerr << "qwalk: parse error: " << e.what() << '\n';
        return 3;
    } catch (const ParameterError &e) {
        std::cerr << "qwalk: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "qwalk: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
