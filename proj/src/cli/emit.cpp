#include "ellb/cli/emit.hpp"

#include <algorithm>
#include <sstream>

#include "ellb/exactalg/homology.hpp"

namespace ellb::cli {

namespace {

long long to_ll(const exactalg::BigInt& v) {
  return v.convert_to<long long>();
}

// Group rendered without spaces so grid cells stay single tokens.
std::string compact_group(const exactalg::FGAbGroup& g) {
  std::string s = g.to_string();
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

} // namespace

std::string finish_json(const Json& j) { return j.dump() + "\n"; }

Json ext_chart_to_json(const hopfext::ExtChartData& chart) {
  Json rows = Json::array();
  for (const auto& [key, cell] : chart.cells) {
    if (!cell.localized_known || cell.localized.is_trivial()) continue;
    Json row;
    row["s"] = cell.s;
    row["n"] = cell.n;
    row["free"] = cell.localized.free_rank;
    Json torsion = Json::array();
    for (const auto& t : cell.localized.torsion) torsion.push_back(to_ll(t));
    row["torsion"] = std::move(torsion);
    Json classes = Json::array();
    for (const auto& c : cell.classes) classes.push_back(c);
    row["classes"] = std::move(classes);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Json::object();
  Json out;
  out["bidegrees"] = std::move(rows);
  return out;
}

std::string ext_chart_to_ascii(const hopfext::ExtChartData& chart) {
  auto cell_text = [&](long s, long n) -> std::string {
    if (!chart.has_cell(s, n)) return ".";
    const hopfext::ExtCell& c = chart.cell(s, n);
    if (!c.localized_known) return "?";
    if (c.localized.is_trivial()) return ".";
    return compact_group(c.localized);
  };

  std::size_t width = 1;
  for (long n = 0; n <= chart.n_max; ++n) {
    width = std::max(width, std::to_string(n).size());
    for (long s = 0; s <= chart.s_max; ++s)
      width = std::max(width, cell_text(s, n).size());
  }

  std::ostringstream out;
  auto pad = [&](const std::string& t) {
    for (std::size_t i = t.size(); i < width + 1; ++i) out << ' ';
    out << t;
  };
  out << "s\\n |";
  for (long n = 0; n <= chart.n_max; ++n) pad(std::to_string(n));
  out << "\n----+";
  for (long n = 0; n <= chart.n_max; ++n)
    out << std::string(width + 1, '-');
  out << "\n";
  for (long s = chart.s_max; s >= 0; --s) {
    std::string h = std::to_string(s);
    out << std::string(4 - std::min<std::size_t>(4, h.size()), ' ') << h
        << "|";
    for (long n = 0; n <= chart.n_max; ++n) pad(cell_text(s, n));
    out << "\n";
  }
  if (!chart.named.empty()) {
    out << "named:";
    for (const auto& [name, cls] : chart.named)
      out << " " << name << " at (" << cls.s << "," << cls.n << ")";
    out << "\n";
  }
  return out.str();
}

Json decomposition_to_json(const Json& header,
                           const reps::DecompositionReport& report) {
  Json out = header;
  out["total_rank"] = report.total_rank;
  Json classes = Json::array();
  for (const auto& cls : report.classes) {
    Json c;
    c["rank"] = cls.rep.rank();
    c["multiplicity"] = cls.multiplicity;
    c["end_dim"] = cls.end_dim;
    c["end_quotient_dim"] = cls.end_quotient_dim;
    c["absolutely_indecomposable"] = (cls.end_quotient_dim == 1);
    Json fp = Json::array();
    for (long long v : cls.fingerprint) fp.push_back(v);
    c["fingerprint"] = std::move(fp);
    classes.push_back(std::move(c));
  }
  out["summands"] = std::move(classes);
  out["projector_count"] = report.projectors.size();
  Json flags = Json::array();
  for (const auto& f : report.flags) flags.push_back(f);
  out["flags"] = std::move(flags);
  return out;
}

std::string decomposition_to_ascii(const reps::DecompositionReport& report) {
  std::ostringstream out;
  out << "total rank " << report.total_rank << ", "
      << report.classes.size() << " class(es)\n";
  for (const auto& cls : report.classes) {
    out << "  rank " << cls.rep.rank() << " x" << cls.multiplicity
        << "  end_dim " << cls.end_dim << "  end/rad "
        << cls.end_quotient_dim;
    if (cls.end_quotient_dim == 1) out << "  (absolutely indecomposable)";
    out << "\n";
  }
  for (const auto& f : report.flags) out << "  note: " << f << "\n";
  return out.str();
}

Json normal_forms_to_json(const std::vector<moduli3::StandardBundle>& forms) {
  Json list = Json::array();
  for (const auto& b : forms) {
    Json f;
    Json summands = Json::array();
    for (const auto& s : b.summands()) {
      Json one;
      one["kind"] = moduli3::to_string(s.kind);
      one["twist"] = s.twist;
      summands.push_back(std::move(one));
    }
    f["summands"] = std::move(summands);
    f["label"] = b.to_string();
    f["rank"] = b.rank();
    Json h1 = Json::array(), h2 = Json::array();
    for (int j = 0; j < 12; ++j) {
      h1.push_back(moduli3::cohomology_dim(b, 1, j));
      h2.push_back(moduli3::cohomology_dim(b, 2, j));
    }
    f["h1"] = std::move(h1);
    f["h2"] = std::move(h2);
    list.push_back(std::move(f));
  }
  Json out;
  out["forms"] = std::move(list);
  return out;
}

std::string normal_forms_to_ascii(
    const std::vector<moduli3::StandardBundle>& forms) {
  std::ostringstream out;
  out << forms.size() << " normal form(s)\n";
  for (const auto& b : forms) {
    out << "  " << b.to_string() << "  rank " << b.rank() << "\n";
    for (int i = 1; i <= 2; ++i) {
      out << "    h" << i << " (j=0..11):";
      for (int j = 0; j < 12; ++j)
        out << " " << moduli3::cohomology_dim(b, i, j);
      out << "\n";
    }
  }
  return out.str();
}

} // namespace ellb::cli
