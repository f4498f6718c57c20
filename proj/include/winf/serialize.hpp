#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutjoin.hpp"
#include "genfun.hpp"
#include "hurwitz.hpp"
#include "partial_perm.hpp"
#include "series.hpp"

namespace winf {

using Json = nlohmann::ordered_json;

enum class Format { json, tsv, pretty };

inline Format parse_format(const std::string& s) {
    if(s == "json") {
        return Format::json;
    }
    if(s == "tsv") {
        return Format::tsv;
    }
    if(s == "pretty") {
        return Format::pretty;
    }
    throw invalid_input("unknown format '" + s + "' (expected json, tsv or pretty)");
}

inline constexpr const char* kTsvVersion = "winf-tsv v1";

/// Flat view of a result. TSV and pretty output are rendered from it; the
/// column set of each kind is fixed.
struct Table {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Document {
    Json json;
    Table table;
};

inline std::string render(const Document& d, Format f) {
    std::ostringstream os;
    switch(f) {
    case Format::json:
        os << d.json.dump(2) << '\n';
        break;
    case Format::tsv: {
        os << "# " << kTsvVersion << ' ' << d.table.kind << '\n';
        auto line = [&](const std::vector<std::string>& cells) {
            for(std::size_t i = 0; i < cells.size(); ++i) {
                os << (i ? "\t" : "") << cells[i];
            }
            os << '\n';
        };
        line(d.table.columns);
        for(const auto& r : d.table.rows) {
            line(r);
        }
        break;
    }
    case Format::pretty: {
        std::vector<std::size_t> width(d.table.columns.size());
        for(std::size_t i = 0; i < width.size(); ++i) {
            width[i] = d.table.columns[i].size();
            for(const auto& r : d.table.rows) {
                width[i] = std::max(width[i], r[i].size());
            }
        }
        os << d.table.kind << '\n';
        auto line = [&](const std::vector<std::string>& cells) {
            os << ' ';
            for(std::size_t i = 0; i < cells.size(); ++i) {
                os << ' ' << cells[i] << std::string(width[i] - cells[i].size(), ' ');
            }
            os << '\n';
        };
        line(d.table.columns);
        for(const auto& r : d.table.rows) {
            line(r);
        }
        break;
    }
    }
    std::string s = os.str();
    // Trailing padding from the pretty layout.
    std::string out;
    std::istringstream is(s);
    for(std::string l; std::getline(is, l);) {
        l.erase(l.find_last_not_of(' ') + 1);
        out += l + '\n';
    }
    return out;
}

inline Json partitions_json(const std::vector<Partition>& ps) {
    Json a = Json::array();
    for(const auto& p : ps) {
        a.push_back(to_string(p));
    }
    return a;
}

inline std::string join(const std::vector<Partition>& ps, const char* sep = " ") {
    std::string s;
    for(std::size_t i = 0; i < ps.size(); ++i) {
        s += (i ? sep : "") + to_string(ps[i]);
    }
    return s;
}

inline Document character_doc(const Partition& lambda, const Partition& mu, std::int64_t value) {
    Document d;
    d.json = {{"lambda", to_string(lambda)}, {"mu", to_string(mu)}, {"value", std::to_string(value)}};
    d.table = {"character", {"lambda", "mu", "value"}, {{to_string(lambda), to_string(mu), std::to_string(value)}}};
    return d;
}

inline Document phi_doc(const Partition& lambda, const Partition& delta, const Rational& value) {
    Document d;
    d.json = {{"lambda", to_string(lambda)}, {"delta", to_string(delta)}, {"value", to_string(value)}};
    d.table = {"phi", {"lambda", "delta", "value"}, {{to_string(lambda), to_string(delta), to_string(value)}}};
    return d;
}

/// {g, h, n, ramification, value, connected}; h is null when no cover exists.
inline Document hurwitz_doc(const HurwitzQuery& q, const HurwitzValue& v, bool connected) {
    Document d;
    d.json = {{"g", q.g},
              {"h", v.source_genus ? Json(*v.source_genus) : Json(nullptr)},
              {"n", q.n},
              {"ramification", partitions_json(q.ramification)},
              {"value", to_string(v.value)},
              {"connected", connected}};
    const std::string h = v.source_genus ? std::to_string(*v.source_genus) : "none";
    d.table = {connected ? "hurwitz-connected" : "hurwitz",
               {"g", "h", "n", "ramification", "value"},
               {{std::to_string(q.g), h, std::to_string(q.n), join(q.ramification), to_string(v.value)}}};
    return d;
}

inline Document classprod_doc(const Partition& lhs, const Partition& rhs, const ClassVector& c) {
    Document d;
    Json result = Json::array();
    d.table = {"classprod", {"lhs", "rhs", "partition", "coeff"}, {}};
    for(const auto& [p, v] : c.coefficients) {
        result.push_back({{"partition", to_string(p)}, {"coeff", to_string(v)}});
        d.table.rows.push_back({to_string(lhs), to_string(rhs), to_string(p), to_string(v)});
    }
    d.json = {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"result", result}};
    return d;
}

/// {delta, N, normalized, blocks: [{n, rows: [{from, to, z_exp, coeff}]}]}; nonzero entries only.
inline Document operator_doc(const BlockOperator& w) {
    Document d;
    d.table = {"operator", {"n", "from", "to", "z_exp", "coeff"}, {}};
    Json blocks = Json::array();
    for(int n = 0; n <= w.bound(); ++n) {
        const auto& basis = partition_basis(n);
        const auto& blk = w.block(n);
        Json rows = Json::array();
        for(std::size_t j = 0; j < basis.dim(); ++j) {
            for(std::size_t i = 0; i < basis.dim(); ++i) {
                for(const auto& [e, c] : blk.at(i, j).terms()) {
                    rows.push_back({{"from", to_string(basis.items[j])},
                                    {"to", to_string(basis.items[i])},
                                    {"z_exp", e},
                                    {"coeff", to_string(c)}});
                    d.table.rows.push_back({std::to_string(n), to_string(basis.items[j]), to_string(basis.items[i]),
                                            std::to_string(e), to_string(c)});
                }
            }
        }
        blocks.push_back({{"n", n}, {"rows", rows}});
    }
    d.json = {{"delta", w.label() ? Json(to_string(*w.label())) : Json(nullptr)},
              {"N", w.bound()},
              {"normalized", w.normalized()},
              {"blocks", blocks}};
    return d;
}

/// {N, terms: [{partition, z_exp, coeff}]}.
inline Document series_doc(const TruncatedSeries& s) {
    Document d;
    d.table = {"series", {"partition", "z_exp", "coeff"}, {}};
    Json terms = Json::array();
    for(const auto& [p, c] : s.terms()) {
        for(const auto& [e, v] : c.terms()) {
            terms.push_back({{"partition", to_string(p)}, {"z_exp", e}, {"coeff", to_string(v)}});
            d.table.rows.push_back({to_string(p), std::to_string(e), to_string(v)});
        }
    }
    d.json = {{"N", s.bound()}, {"terms", terms}};
    return d;
}

inline TruncatedSeries series_from_json(const Json& j) {
    try {
        TruncatedSeries s(j.at("N").get<int>());
        for(const auto& t : j.at("terms")) {
            s.add(parse_partition(t.at("partition").get<std::string>()),
                  LaurentScalar::monomial(parse_rational(t.at("coeff").get<std::string>()), t.at("z_exp").get<int>()));
        }
        return s;
    } catch(const nlohmann::json::exception& e) {
        throw invalid_input(std::string("malformed series JSON: ") + e.what());
    }
}

/// Sorted list of {u_exps, partitions, z_exp, coeff}; partitions are [p^{(1)},] p.
inline Document multiseries_doc(const MultiSeries& s) {
    Document d;
    d.table = {"genfun", {"u_exps", "partitions", "z_exp", "coeff"}, {}};
    d.json = Json::array();
    for(const auto& [k, c] : s.terms()) {
        std::string u;
        for(std::size_t i = 0; i < k.u_exps.size(); ++i) {
            u += (i ? "," : "") + std::to_string(k.u_exps[i]);
        }
        for(const auto& [e, v] : c.terms()) {
            d.json.push_back(
                {{"u_exps", k.u_exps}, {"partitions", partitions_json(k.families)}, {"z_exp", e}, {"coeff", to_string(v)}});
            d.table.rows.push_back({"[" + u + "]", join(k.families, ","), std::to_string(e), to_string(v)});
        }
    }
    return d;
}

} // namespace winf
