#include "qtorus/io.hpp"

#include <cstdio>
#include <limits>

#include <json.hpp>

#include "qtorus/errors.hpp"

namespace qtorus::io {
namespace {

using nlohmann::json;

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + j.get<std::string>());
    }
  }
  throw ParseError("expected an integer index, got " + j.dump());
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return obj.at(name);
}

double number(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number()) throw ParseError(std::string("field \"") + name + "\" must be a number");
  return v.get<double>();
}

template <typename Map>
json terms_to_json(const Map& terms) {
  json arr = json::array();
  for (const auto& [v, c] : terms) {
    arr.push_back({{"m", integer_to_json(v.m)},
                   {"k", integer_to_json(v.k)},
                   {"re", c.real()},
                   {"im", c.imag()}});
  }
  return arr;
}

template <typename Sink>
void terms_from_json(const json& arr, Sink&& sink) {
  if (!arr.is_array()) throw ParseError("expected an array of terms");
  for (const json& t : arr) {
    sink(WeylIndex{integer_from_json(field(t, "m")), integer_from_json(field(t, "k"))},
         Complex{number(t, "re"), number(t, "im")});
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string algebra_to_json(const AlgebraElement& a) {
  json doc = {{"n", a.planck().n()}, {"terms", terms_to_json(a.terms())}};
  return doc.dump();
}

AlgebraElement algebra_from_json(std::string_view text) {
  const json doc = parse(text);
  const json& n = field(doc, "n");
  if (!n.is_number_integer()) throw ParseError("field \"n\" must be an integer");
  try {
    AlgebraElement a{PlanckParameter(n.get<std::int64_t>())};
    terms_from_json(field(doc, "terms"), [&](WeylIndex v, Complex c) { a.add_term(v, c); });
    return a;
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

std::string symbol_to_json(const TorusSymbol& f) {
  return json{{"modes", terms_to_json(f.modes())}}.dump();
}

TorusSymbol symbol_from_json(std::string_view text) {
  const json doc = parse(text);
  TorusSymbol f;
  terms_from_json(field(doc, "modes"), [&](WeylIndex v, Complex c) { f.add_mode(v, c); });
  return f;
}

std::string sector_to_json(const SectorMatrix& m) {
  json entries = json::array();
  for (std::int64_t r = 0; r < m.dim(); ++r) {
    for (std::int64_t c = 0; c < m.dim(); ++c) {
      entries.push_back(m(r, c).real());
      entries.push_back(m(r, c).imag());
    }
  }
  return json{{"dim", m.dim()}, {"entries", entries}}.dump();
}

SectorMatrix sector_from_json(std::string_view text) {
  const json doc = parse(text);
  const json& dim = field(doc, "dim");
  const json& entries = field(doc, "entries");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    throw ParseError("field \"dim\" must be a positive integer");
  }
  const std::int64_t n = dim.get<std::int64_t>();
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(2 * n * n)) {
    throw ParseError("field \"entries\" must hold 2*dim*dim numbers");
  }
  SectorMatrix m(n);
  std::size_t i = 0;
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = 0; c < n; ++c, i += 2) {
      if (!entries[i].is_number() || !entries[i + 1].is_number()) {
        throw ParseError("non-numeric matrix entry");
      }
      m(r, c) = Complex{entries[i].get<double>(), entries[i + 1].get<double>()};
    }
  }
  return m;
}

std::string sector_to_csv(const SectorMatrix& m) {
  std::string out = "row,col,re,im\n";
  for (std::int64_t r = 0; r < m.dim(); ++r) {
    for (std::int64_t c = 0; c < m.dim(); ++c) {
      out += std::to_string(r) + ',' + std::to_string(c) + ',' + format_double(m(r, c).real()) +
             ',' + format_double(m(r, c).imag()) + '\n';
    }
  }
  return out;
}

std::string report_to_csv(const DiagnosticsReport& r) {
  std::string out = "step,value_re,value_im,reference_re,reference_im\n";
  const std::string ref =
      format_double(r.limit_reference.real()) + ',' + format_double(r.limit_reference.imag());
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    out += std::to_string(r.steps[i]) + ',' + format_double(r.values[i].real()) + ',' +
           format_double(r.values[i].imag()) + ',' + ref + '\n';
  }
  return out;
}

std::string report_to_json(const DiagnosticsReport& r) {
  json rows = json::array();
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    rows.push_back({{"step", r.steps[i]},
                    {"value_re", r.values[i].real()},
                    {"value_im", r.values[i].imag()},
                    {"reference_re", r.limit_reference.real()},
                    {"reference_im", r.limit_reference.imag()}});
  }
  return rows.dump();
}

DiagnosticsReport report_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_array()) throw ParseError("diagnostics report must be an array of rows");
  DiagnosticsReport r;
  for (const json& row : doc) {
    const json& step = field(row, "step");
    if (!step.is_number_integer()) throw ParseError("field \"step\" must be an integer");
    r.steps.push_back(step.get<std::int64_t>());
    r.values.emplace_back(number(row, "value_re"), number(row, "value_im"));
    r.limit_reference = Complex{number(row, "reference_re"), number(row, "reference_im")};
  }
  return r;
}

std::string kernel_plot_to_csv(const std::vector<KernelPlotRow>& rows) {
  std::string out = "r,g_abs2\n";
  for (const auto& row : rows) out += format_double(row.r) + ',' + format_double(row.g_abs2) + '\n';
  return out;
}

}  // namespace qtorus::io
