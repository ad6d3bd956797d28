#pragma once

// JSON codecs for the exact scalars and model objects.  Integers and
// rationals serialize as decimal strings ("p" or "p/q"), cyclotomic elements
// as {"k": k, "coeffs": [...]}, polynomials as coefficient arrays, lattice
// configurations as hex-packed edge bitmaps.  Round-trips are exact.

#include <string>
#include <vector>

#include <json.hpp>

#include "ice20v/apm.hpp"
#include "ice20v/cyclotomic.hpp"
#include "ice20v/lattice.hpp"
#include "ice20v/matrix.hpp"
#include "ice20v/poly.hpp"
#include "ice20v/region.hpp"
#include "ice20v/rings.hpp"
#include "ice20v/series.hpp"

namespace ice20v {

using json = nlohmann::json;

inline json to_json(const Int& x) { return x.get_str(); }
inline json to_json(const Rat& x) { return x.get_str(); }

inline Int int_from_json(const json& j) {
  Int x;
  if (x.set_str(j.get<std::string>(), 10) != 0)
    throw std::invalid_argument("bad integer literal");
  return x;
}

inline Rat rat_from_json(const json& j) { return rat_from_string(j.get<std::string>()); }

inline json to_json(const Cyclotomic& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  return json{{"k", x.order_log()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
  int k = j.at("k").get<int>();
  std::vector<Rat> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(rat_from_string(c.get<std::string>()));
  return Cyclotomic(k, std::move(cs));
}

template <class R>
json poly_to_json(const Poly<R>& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

inline PolyZ poly_z_from_json(const json& j) {
  std::vector<Int> cs;
  for (const auto& c : j) cs.push_back(int_from_json(c));
  return PolyZ(std::move(cs));
}

template <class T>
json matrix_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class R>
json coeff_table_to_json(const CoeffTable<R>& t) {
  json rows = json::array();
  for (std::size_t i = 0; i <= t.max_i; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j <= t.max_j; ++j) row.push_back(to_json(t.at(i, j)));
    rows.push_back(row);
  }
  return json{{"max_i", t.max_i}, {"max_j", t.max_j}, {"values", rows}};
}

// --- bit-vector packing -------------------------------------------------------

inline std::string bits_to_hex(const std::vector<std::uint8_t>& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  std::size_t nbytes = (bits.size() + 7) / 8;
  for (std::size_t b = 0; b < nbytes; ++b) {
    unsigned byte = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      std::size_t idx = b * 8 + k;
      if (idx < bits.size() && bits[idx]) byte |= 1u << k;
    }
    out += digits[byte >> 4];
    out += digits[byte & 15];
  }
  return out;
}

inline std::vector<std::uint8_t> hex_to_bits(const std::string& hex, std::size_t nbits) {
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return unsigned(c - '0');
    if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
    throw std::invalid_argument("bad hex digit");
  };
  if (hex.size() != 2 * ((nbits + 7) / 8)) throw std::invalid_argument("hex length mismatch");
  std::vector<std::uint8_t> bits(nbits, 0);
  for (std::size_t idx = 0; idx < nbits; ++idx) {
    unsigned byte = nibble(hex[2 * (idx / 8)]) << 4 | nibble(hex[2 * (idx / 8) + 1]);
    bits[idx] = byte >> (idx % 8) & 1;
  }
  return bits;
}

inline json to_json(const LatticeConfig& c) {
  return json{{"rows", c.rows()},
              {"cols", c.cols()},
              {"boundary", c.boundary()},
              {"h_bits", bits_to_hex(c.h_bits())},
              {"v_bits", bits_to_hex(c.v_bits())},
              {"d_bits", bits_to_hex(c.d_bits())}};
}

inline LatticeConfig config_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  LatticeConfig c(rows, cols, j.at("boundary").get<std::string>());
  c.h_bits() = hex_to_bits(j.at("h_bits").get<std::string>(), (cols + 1) * rows);
  c.v_bits() = hex_to_bits(j.at("v_bits").get<std::string>(), cols * (rows + 1));
  c.d_bits() = hex_to_bits(j.at("d_bits").get<std::string>(), (cols + 1) * (rows + 1));
  return c;
}

// APM entries in the seven-symbol alphabet.
inline std::string apm_entry_symbol(const Eisenstein& e) {
  if (e.is_zero()) return "0";
  if (e == Eisenstein(1, 0)) return "1";
  if (e == Eisenstein(-1, 0)) return "-1";
  if (e == Eisenstein::omega()) return "w";
  if (e == -Eisenstein::omega()) return "-w";
  if (e == Eisenstein::omega2()) return "w2";
  if (e == -Eisenstein::omega2()) return "-w2";
  throw std::invalid_argument("value outside the phase alphabet");
}

inline Eisenstein apm_entry_from_symbol(const std::string& s) {
  if (s == "0") return {};
  if (s == "1") return {1, 0};
  if (s == "-1") return {-1, 0};
  if (s == "w") return Eisenstein::omega();
  if (s == "-w") return -Eisenstein::omega();
  if (s == "w2") return Eisenstein::omega2();
  if (s == "-w2") return -Eisenstein::omega2();
  throw std::invalid_argument("bad phase symbol: " + s);
}

inline json to_json(const ApmMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(apm_entry_symbol(m.value(i, j)));
    rows.push_back(row);
  }
  return json{{"n", m.size()}, {"entries", rows}};
}

}  // namespace ice20v
