// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "lattice.hpp"

namespace lathom {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poset_json(const Poset& p) {
  ordered_json covers = ordered_json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return ordered_json{{"elements", p.labels()}, {"covers", covers}};
}

std::vector<std::string> labels_of(const Poset& p, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(p.label(x));
  return out;
}

std::string joined(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

// Shared structural facts; the lattice slot is empty for non-lattices.
struct Structure {
  std::optional<Lattice> lat;
  std::string reason;
  bool bounded = false, connected = false;
  int bottom = -1, top = -1;
};

Structure classify(const Poset& p) {
  Structure s;
  try {
    s.lat = Lattice::from_poset(p);
  } catch (const NotALatticeError& e) {
    s.reason = e.what();
  }
  s.bounded = p.is_bounded(&s.bottom, &s.top);
  s.connected = p.is_connected();
  return s;
}

ordered_json profile_json(const Poset& p, const HomProfile& h) {
  const int n = static_cast<int>(p.size());
  ordered_json per = ordered_json::array();
  for (int x = 0; x < n; ++x)
    per.push_back(ordered_json{{"element", p.label(x)},
                               {"pdim_simple", h.pdim_simple[x]},
                               {"idim_simple", h.idim_simple[x]},
                               {"grade_simple", h.grade_simple[x]},
                               {"cograde_simple", h.cograde_simple[x]},
                               {"pdim_injective", h.pdim_injective[x]},
                               {"idim_projective", h.idim_projective[x]}});
  ordered_json cores = ordered_json::array();
  for (const auto& term : h.coresolution_terms) cores.push_back(labels_of(p, term));
  ordered_json bass = ordered_json::array();
  for (int y = 0; y < n; ++y)
    for (std::size_t i = 0; i < h.projective_coresolutions[y].size(); ++i)
      for (int x = 0; x < n; ++x) {
        const auto& t = h.projective_coresolutions[y][i];
        const int mu = static_cast<int>(std::count(t.begin(), t.end(), x));
        if (mu)
          bass.push_back(ordered_json{
              {"x", p.label(x)}, {"i", static_cast<int>(i)}, {"y", p.label(y)}, {"mu", mu}});
      }

  ordered_json out{{"per_element", per},
                   {"gldim", h.gldim},
                   {"domdim", h.domdim ? ordered_json(*h.domdim) : ordered_json("infinite")},
                   {"gorenstein_upto",
                    h.gorenstein_upto ? ordered_json(*h.gorenstein_upto) : ordered_json("all")},
                   {"auslander_regular", h.auslander_regular},
                   {"auslander_regular_op", h.auslander_regular_op},
                   {"diagonal", h.diagonal},
                   {"coresolution_of_algebra", cores},
                   {"bass", bass}};
  if (h.grade_bijection) {
    ordered_json gb = ordered_json::array();
    for (int x = 0; x < n; ++x)
      gb.push_back({p.label(x), p.label((*h.grade_bijection)[x])});
    out["grade_bijection"] = gb;
  } else {
    out["grade_bijection"] = nullptr;
    out["grade_bijection_note"] = h.grade_bijection_note;
  }
  return out;
}

void profile_text(std::ostream& os, const Poset& p, const HomProfile& h) {
  const int n = static_cast<int>(p.size());
  os << "per-element invariants (pdim S, idim S, grade S, cograde S, pdim I, idim P):\n";
  for (int x = 0; x < n; ++x)
    os << "  " << p.label(x) << ": " << h.pdim_simple[x] << " " << h.idim_simple[x] << " "
       << h.grade_simple[x] << " " << h.cograde_simple[x] << " " << h.pdim_injective[x] << " "
       << h.idim_projective[x] << "\n";
  os << "gldim: " << h.gldim << "\n";
  os << "domdim: " << (h.domdim ? std::to_string(*h.domdim) : std::string("infinite")) << "\n";
  os << "gorenstein_upto: "
     << (h.gorenstein_upto ? std::to_string(*h.gorenstein_upto) : std::string("all")) << "\n";
  os << "auslander_regular: " << (h.auslander_regular ? "yes" : "no")
     << ", opposite: " << (h.auslander_regular_op ? "yes" : "no")
     << ", diagonal: " << (h.diagonal ? "yes" : "no") << "\n";
  os << "coresolution of the algebra:\n";
  for (std::size_t i = 0; i < h.coresolution_terms.size(); ++i)
    os << "  I^" << i << " = [" << joined(labels_of(p, h.coresolution_terms[i]), ", ") << "]\n";
  if (h.grade_bijection) {
    os << "grade bijection:\n";
    for (int x = 0; x < n; ++x)
      os << "  " << p.label(x) << " -> " << p.label((*h.grade_bijection)[x]) << "\n";
  } else {
    os << "grade bijection: undefined (" << h.grade_bijection_note << ")\n";
  }
}

}  // namespace

std::string render_analysis(std::shared_ptr<const Poset> p, const Field& f,
                            const ReportOptions& opt) {
  const Structure s = classify(*p);
  const bool distributive = s.lat && s.lat->is_distributive();
  const HomProfile h = profile(p, f);

  std::optional<ForbiddenSublattice> fs;
  if (s.lat) fs = s.lat->find_forbidden_sublattice();
  std::vector<int> rowmo;
  if (distributive) rowmo = s.lat->rowmotion_permutation();

  if (opt.json) {
    ordered_json out{{"schema", 1}, {"command", "analyze"}, {"field", f.name()},
                     {"poset", poset_json(*p)}};
    out["bounded"] = s.bounded;
    out["connected"] = s.connected;
    out["lattice"] = s.lat.has_value();
    if (!s.lat) out["not_lattice_reason"] = s.reason;
    if (s.lat) {
      out["distributive"] = distributive;
      if (fs) {
        std::vector<int> ids(fs->elements.begin(), fs->elements.end());
        out["forbidden_sublattice"] =
            ordered_json{{"kind", fs->kind}, {"elements", labels_of(*p, ids)}};
      } else {
        out["forbidden_sublattice"] = nullptr;
      }
      out["join_irreducibles"] = labels_of(*p, s.lat->join_irreducibles());
      out["meet_irreducibles"] = labels_of(*p, s.lat->meet_irreducibles());
      if (distributive) {
        ordered_json rm = ordered_json::array();
        for (std::size_t x = 0; x < p->size(); ++x)
          rm.push_back({p->label(static_cast<int>(x)), p->label(rowmo[x])});
        out["rowmotion"] = rm;
      }
    }
    out["profile"] = profile_json(*p, h);
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "poset with " << p->size() << " elements over " << f.name() << "\n";
  os << "bounded: " << (s.bounded ? "yes" : "no") << ", connected: "
     << (s.connected ? "yes" : "no") << "\n";
  if (!s.lat) {
    os << "not a lattice: " << s.reason << "\n";
  } else {
    os << "lattice: yes, distributive: " << (distributive ? "yes" : "no") << "\n";
    if (fs) {
      std::vector<int> ids(fs->elements.begin(), fs->elements.end());
      os << "forbidden sublattice: " << fs->kind << " {" << joined(labels_of(*p, ids), ", ")
         << "}\n";
    }
    os << "join irreducibles: [" << joined(labels_of(*p, s.lat->join_irreducibles()), ", ")
       << "]\n";
    os << "meet irreducibles: [" << joined(labels_of(*p, s.lat->meet_irreducibles()), ", ")
       << "]\n";
    if (distributive) {
      os << "rowmotion:\n";
      for (std::size_t x = 0; x < p->size(); ++x)
        os << "  " << p->label(static_cast<int>(x)) << " -> " << p->label(rowmo[x]) << "\n";
    }
  }
  profile_text(os, *p, h);
  return os.str();
}

std::string render_resolution(std::shared_ptr<const Poset> p, const Field& f,
                              const std::string& kind, const std::string& label,
                              const ReportOptions& opt) {
  const int x = p->index_of_label(label);
  if (x < 0) throw SemanticError("unknown element label: " + label);

  IncidenceAlgebra a(p, f);
  PosetModule m = [&] {
    if (kind == "simple") return a.simple(x);
    if (kind == "projective") return a.projective(x);
    if (kind == "injective") return a.injective(x);
    throw SemanticError("unknown module kind: " + kind +
                        " (expected simple, projective or injective)");
  }();

  const ProjComplex res = a.minimal_projective_resolution(m);
  const auto cores = a.injective_coresolution(m);
  const auto mu = a.bass_numbers(m);

  if (opt.json) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : res.terms) {
      auto sorted = t;
      std::sort(sorted.begin(), sorted.end());
      terms.push_back(labels_of(*p, sorted));
    }
    ordered_json coterms = ordered_json::array();
    for (const auto& t : cores) {
      auto sorted = t;
      std::sort(sorted.begin(), sorted.end());
      coterms.push_back(labels_of(*p, sorted));
    }
    ordered_json bass = ordered_json::array();
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (std::size_t v = 0; v < mu[i].size(); ++v)
        if (mu[i][v])
          bass.push_back(ordered_json{{"i", static_cast<int>(i)},
                                      {"x", p->label(static_cast<int>(v))},
                                      {"mu", mu[i][v]}});
    ordered_json out{{"schema", 1},
                     {"command", "resolve"},
                     {"field", f.name()},
                     {"module", ordered_json{{"kind", kind}, {"element", label}}},
                     {"resolution",
                      ordered_json{{"terms", terms},
                                   {"pdim", res.length()},
                                   {"minimal", complex_is_minimal(res)}}},
                     {"coresolution",
                      ordered_json{{"terms", coterms},
                                   {"idim", static_cast<int>(cores.size()) - 1}}},
                     {"bass_row", bass}};
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  os << kind << " module at " << label << " over " << f.name() << "\n";
  os << "minimal projective resolution (pdim " << res.length() << "):\n";
  for (std::size_t r = 0; r < res.terms.size(); ++r) {
    auto sorted = res.terms[r];
    std::sort(sorted.begin(), sorted.end());
    os << "  P_" << r << " = [" << joined(labels_of(*p, sorted), ", ") << "]\n";
  }
  os << "minimal injective coresolution (idim " << cores.size() - 1 << "):\n";
  for (std::size_t r = 0; r < cores.size(); ++r) {
    auto sorted = cores[r];
    std::sort(sorted.begin(), sorted.end());
    os << "  I^" << r << " = [" << joined(labels_of(*p, sorted), ", ") << "]\n";
  }
  os << "bass numbers (degree, socle vertex, multiplicity):\n";
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t v = 0; v < mu[i].size(); ++v)
      if (mu[i][v])
        os << "  mu^" << i << "(" << p->label(static_cast<int>(v)) << ") = " << mu[i][v]
           << "\n";
  return os.str();
}

std::string render_verification(const VerificationReport& rep, const std::string& command,
                                const Field& f, const ReportOptions& opt) {
  if (opt.json) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
      ordered_json jc{{"name", c.name},
                      {"paper_ref", c.claim},
                      {"status", c.status},
                      {"witness", c.witness}};
      if (opt.timings) jc["millis"] = c.millis;
      checks.push_back(std::move(jc));
    }
    ordered_json out{{"schema", 1},       {"command", command},
                     {"field", f.name()}, {"input", rep.input_label},
                     {"checks", checks},  {"all_passed", rep.all_passed()}};
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  os << command << ": " << rep.input_label << " over " << f.name() << "\n";
  int pass = 0, fail = 0, skip = 0;
  for (const auto& c : rep.checks) {
    os << "  [" << c.status << "] " << c.name;
    if (!c.witness.empty()) os << ": " << c.witness;
    if (opt.timings) os << " (" << c.millis << " ms)";
    os << "\n";
    if (c.status == "pass") ++pass;
    else if (c.status == "fail") ++fail;
    else ++skip;
  }
  os << (fail == 0 ? "PASS" : "FAIL") << ": " << pass << " passed, " << fail << " failed, "
     << skip << " skipped\n";
  return os.str();
}

}  // namespace lathom
