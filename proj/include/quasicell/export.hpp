#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "quasicell/afun.hpp"
#include "quasicell/canonical.hpp"
#include "quasicell/qpset.hpp"
#include "quasicell/tableau.hpp"
#include "quasicell/wgraph.hpp"

namespace quasicell {

using Json = nlohmann::ordered_json;

inline Json basis_json(const QpSet& X) {
  Json out = Json::array();
  for (const Perm& p : X.carrier) out.push_back(p.str());
  return out;
}

// {"basis": [...], "entries": [[y, x, "poly"] ...]}
inline Json matrix_json(const QpSet& X, const PolyMatrix& mat) {
  Json j;
  j["basis"] = basis_json(X);
  Json entries = Json::array();
  for (int y = 0; y < mat.n; ++y)
    for (int x = 0; x < mat.n; ++x)
      if (!mat.at(y, x).is_zero()) entries.push_back({y, x, mat.at(y, x).str()});
  j["entries"] = std::move(entries);
  return j;
}

inline Json canonical_json(const CanonicalData& data) {
  const QpSet& X = *data.set;
  Json j;
  j["kind"] = kind_name(data.kind);
  j["basis"] = basis_json(X);
  j["canonical"] = matrix_json(X, data.c)["entries"];
  j["bar"] = matrix_json(X, data.r)["entries"];
  j["inverse"] = matrix_json(X, data.inv)["entries"];
  Json mu = Json::array();
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (data.mu_at(x, y) != 0) mu.push_back({x, y, data.mu_at(x, y).str()});
  j["mu"] = std::move(mu);
  return j;
}

inline std::string canonical_csv(const CanonicalData& data) {
  const QpSet& X = *data.set;
  std::ostringstream out;
  out << "kind,y,x,poly\n";
  for (int y = 0; y < X.size(); ++y)
    for (int x = 0; x < X.size(); ++x)
      if (!data.c.at(y, x).is_zero())
        out << kind_name(data.kind) << ',' << X.carrier[static_cast<size_t>(y)].str() << ','
            << X.carrier[static_cast<size_t>(x)].str() << ',' << data.c.at(y, x).str() << '\n';
  return out.str();
}

// {vertices, tau (sorted generator indices), edges: [x, y, weight], cells,
// molecules}
inline Json graph_json(const LabeledGraph& g, const std::vector<std::vector<int>>& cell_part,
                       const std::vector<std::vector<int>>& molecule_part) {
  const QpSet& X = *g.set;
  Json j;
  j["kind"] = kind_name(g.kind);
  j["vertices"] = basis_json(X);
  Json tau = Json::array();
  for (int x = 0; x < g.size(); ++x) {
    Json t = Json::array();
    for (int s : g.tau[static_cast<size_t>(x)]) t.push_back(s);
    tau.push_back(std::move(t));
  }
  j["tau"] = std::move(tau);
  Json edges = Json::array();
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (x != y && g.weight(x, y) != 0) edges.push_back({x, y, g.weight(x, y).str()});
  j["edges"] = std::move(edges);
  j["cells"] = cell_part;
  j["molecules"] = molecule_part;
  return j;
}

inline std::string graph_dot(const LabeledGraph& g) {
  const QpSet& X = *g.set;
  std::ostringstream out;
  out << "digraph gamma_" << kind_name(g.kind) << " {\n";
  for (int x = 0; x < g.size(); ++x) {
    out << "  n" << x << " [label=\"" << X.carrier[static_cast<size_t>(x)].str() << " {";
    bool first = true;
    for (int s : g.tau[static_cast<size_t>(x)]) {
      if (!first) out << ',';
      out << 's' << s;
      first = false;
    }
    out << "}\"];\n";
  }
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      if (x == y || g.weight(x, y) == 0) continue;
      if (y > x && g.weight(x, y) == g.weight(y, x)) {
        out << "  n" << x << " -> n" << y << " [dir=both,label=\"" << g.weight(x, y).str()
            << "\"];\n";
      } else if (g.weight(y, x) != g.weight(x, y)) {
        out << "  n" << x << " -> n" << y << " [label=\"" << g.weight(x, y).str() << "\"];\n";
      }
    }
  out << "}\n";
  return out.str();
}

// CSV with columns (element, ht, a, a', Des, Des'); descent sets print as
// generator indices joined by ';'
inline std::string afun_csv(const QpSet& X, const std::vector<int>& a_m,
                            const std::vector<int>& a_n) {
  std::ostringstream out;
  out << "element,ht,a,a_prime,des,des_prime\n";
  for (int x = 0; x < X.size(); ++x) {
    out << X.carrier[static_cast<size_t>(x)].str() << ',' << X.ht_str(x) << ','
        << a_m[static_cast<size_t>(x)] << ',' << a_n[static_cast<size_t>(x)] << ',';
    bool first = true;
    for (int s = 1; s <= X.gens(); ++s)
      if (!X.raises(s, x)) {
        if (!first) out << ';';
        out << s;
        first = false;
      }
    out << ',';
    first = true;
    for (int s = 1; s <= X.gens(); ++s)
      if (X.lowers(s, x)) {
        if (!first) out << ';';
        out << s;
        first = false;
      }
    out << '\n';
  }
  return out.str();
}

inline Json afun_json(const StructCoeffTables& tm, const StructCoeffTables& tn) {
  const QpSet& X = *tm.set;
  Json j;
  j["basis"] = basis_json(X);
  j["bound_m"] = tm.bound_B;
  j["bound_n"] = tn.bound_B;
  j["a"] = tm.a;
  j["a_prime"] = tn.a;
  auto gamma_summary = [&](const StructCoeffTables& t) {
    Json rows = Json::array();
    for (int z = 0; z < X.size(); ++z) {
      long long count = 0;
      Int max_abs = 0;
      for (const auto& [w, y, zz, g] : t.gamma) {
        if (zz != z) continue;
        ++count;
        Int mag = g < 0 ? Int(-g) : g;
        if (mag > max_abs) max_abs = mag;
      }
      rows.push_back({{"z", X.carrier[static_cast<size_t>(z)].str()},
                      {"a", t.a[static_cast<size_t>(z)]},
                      {"gamma_nonzero", count},
                      {"gamma_max_abs", max_abs.str()}});
    }
    return rows;
  };
  j["gamma_m"] = gamma_summary(tm);
  j["gamma_n"] = gamma_summary(tn);
  auto per_yz = [&](const StructCoeffTables& t) {
    Json rows = Json::array();
    for (int y = 0; y < X.size(); ++y) rows.push_back(t.per_yz_max[static_cast<size_t>(y)]);
    return rows;
  };
  j["per_yz_max_m"] = per_yz(tm);
  j["per_yz_max_n"] = per_yz(tn);
  return j;
}

inline Json tableau_json(const Tableau& T) {
  Json rows = Json::array();
  for (const auto& r : T.rows) rows.push_back(r);
  return rows;
}

inline Json insertion_json(int n) {
  Json out = Json::array();
  for (const Perm& z : enumerate_fpf(n)) {
    const Tableau pr = p_rbs(z), pc = p_cbs(z);
    out.push_back({{"z", z.str()},
                   {"p_rbs", tableau_json(pr)},
                   {"rbs_shape", pr.shape()},
                   {"rbs_A", stat_A(pr)},
                   {"p_cbs", tableau_json(pc)},
                   {"cbs_shape", pc.shape()},
                   {"cbs_A", stat_A(pc)}});
  }
  return out;
}

inline std::string insertion_csv(int n) {
  std::ostringstream out;
  out << "z,p_rbs,rbs_A,p_cbs,cbs_A\n";
  for (const Perm& z : enumerate_fpf(n)) {
    const Tableau pr = p_rbs(z), pc = p_cbs(z);
    out << z.str() << ',' << pr.str() << ',' << stat_A(pr) << ',' << pc.str() << ','
        << stat_A(pc) << '\n';
  }
  return out.str();
}

}  // namespace quasicell
