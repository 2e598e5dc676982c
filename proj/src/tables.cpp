#include <sstream>

#include "derinv/cli.hpp"
#include "derinv/errors.hpp"
#include "derinv/invariants.hpp"
#include "derinv/kernels.hpp"
#include "derinv/shalev.hpp"

namespace derinv::cli {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

Table rho_small() {
  const std::vector<unsigned> ns{1, 2, 3, 4, 5, 7, 8, 9, 10, 11};
  Table t{{"n", "rho_n", "prime factors"}, std::vector<std::vector<std::string>>(ns.size())};
  kernels::omp::for_each_row(ns.size(), [&](std::size_t i) {
    const Integer r = rho(ns[i]);
    t.rows[i] = {std::to_string(ns[i]), r.get_str(), to_string(factor_int(r))};
  });
  return t;
}

Table rho_six() {
  const std::vector<unsigned> ns{6, 12, 18, 24, 30, 36};
  Table t{{"n", "rho_n"}, std::vector<std::vector<std::string>>(ns.size())};
  kernels::omp::for_each_row(ns.size(), [&](std::size_t i) {
    t.rows[i] = {std::to_string(ns[i]), to_string(factor_int(rho(ns[i])))};
  });
  return t;
}

Table pp2() {
  const std::vector<std::string> hs{"t+1", "t^3+t+1", "t^4+t^3+t^2+t+1", "t^5+t^2+1", "t^7+t+1", "t^9+t^4+t^2+t+1"};
  Table t{{"h", "per(h(t^2-t))"}, std::vector<std::vector<std::string>>(hs.size())};
  kernels::omp::for_each_row(hs.size(), [&](std::size_t i) {
    const FpPoly h = parse_fp_poly(hs[i], 2);
    t.rows[i] = {to_string(h), pp_element(h).get_str()};
  });
  return t;
}

Table np_scan_table() {
  Table t{{"n", "p"}, {}};
  for (const auto& row : np_scan(scan_pairs(12))) {
    if (row.member) t.rows.push_back({std::to_string(row.n), std::to_string(row.p)});
  }
  return t;
}

}  // namespace

std::vector<std::string> table_names() { return {"rho-small", "rho-six", "pp2", "np-scan"}; }

Table make_table(std::string_view which) {
  if (which == "rho-small") return rho_small();
  if (which == "rho-six") return rho_six();
  if (which == "pp2") return pp2();
  if (which == "np-scan") return np_scan_table();
  throw InvalidArgument("unknown table '" + std::string(which) + "'");
}

std::string render(const Table& t, Format f) {
  std::ostringstream s;
  switch (f) {
    case Format::Md: {
      auto line = [&s](const std::vector<std::string>& cells) {
        s << '|';
        for (const auto& c : cells) s << ' ' << c << " |";
        s << '\n';
      };
      line(t.header);
      s << '|';
      for (std::size_t i = 0; i < t.header.size(); ++i) s << "---|";
      s << '\n';
      for (const auto& row : t.rows) line(row);
      break;
    }
    case Format::Csv: {
      auto line = [&s](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) s << (i ? "," : "") << csv_cell(cells[i]);
        s << '\n';
      };
      line(t.header);
      for (const auto& row : t.rows) line(row);
      break;
    }
    case Format::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
        rows.push_back(obj);
      }
      s << rows.dump(2) << '\n';
      break;
    }
  }
  return s.str();
}

nlohmann::json factorization_json(const Factorization& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [prime, e] : f.factors) {
    nlohmann::json q = prime.fits_ulong_p() ? nlohmann::json(prime.get_ui()) : nlohmann::json(prime.get_str());
    factors.push_back(nlohmann::json::array({q, e}));
  }
  return {{"sign", f.sign}, {"factors", factors}};
}

}  // namespace derinv::cli
