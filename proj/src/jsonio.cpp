#include "fpzeta/jsonio.hpp"

#include <sstream>

namespace fpzeta {

namespace {

void append_escaped(std::ostringstream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      default: out << c;
    }
  }
  out << '"';
}

void append_params(std::ostringstream& out,
                   const std::map<std::string, long long>& params) {
  out << "{";
  bool first = true;
  for (const auto& [k, v] : params) {  // std::map: fixed key order
    if (!first) out << ",";
    first = false;
    append_escaped(out, k);
    out << ":" << v;
  }
  out << "}";
}

void append_record_body(std::ostringstream& out, const RunRecord& r,
                        bool with_meta) {
  out << "{\"ring\":";
  append_escaped(out, r.ring);
  out << ",\"params\":";
  append_params(out, r.params);
  out << ",\"p\":" << r.p;
  out << ",\"flavor\":\"" << flavor_name(r.flavor) << "\"";
  out << ",\"method\":\"" << method_name(r.method) << "\"";
  out << ",\"coefficients\":[";
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
    if (i) out << ",";
    out << r.coefficients[i].str();
  }
  out << "]";
  if (with_meta)
    out << ",\"meta\":{\"elapsed_ms\":" << r.elapsed_ms
        << ",\"nodes\":" << r.nodes << "}";
  out << "}";
}

}  // namespace

std::string to_json(const RunRecord& record, bool with_meta) {
  std::ostringstream out;
  append_record_body(out, record, with_meta);
  return out.str();
}

std::string records_to_json(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out << ",\n ";
    append_record_body(out, records[i], false);
  }
  out << "]\n";
  return out.str();
}

std::string to_json(const ScanReport& report) {
  std::ostringstream out;
  out << "{\"ring\":";
  append_escaped(out, report.ring);
  out << ",\"params\":";
  append_params(out, report.params);
  out << ",\"flavor\":\"" << flavor_name(report.flavor) << "\"";
  out << ",\"primes\":[";
  for (std::size_t i = 0; i < report.primes.size(); ++i) {
    if (i) out << ",";
    out << report.primes[i];
  }
  out << "],\"degree\":" << report.degree_bound;
  out << ",\"modulus\":";
  if (report.modulus)
    out << *report.modulus;
  else
    out << "null";
  out << ",\"coefficients\":[";
  for (std::size_t k = 0; k < report.fits.size(); ++k) {
    if (k) out << ",\n ";
    const auto& fit = report.fits[k];
    out << "{\"k\":" << k << ",\"polynomial\":"
        << (fit.all_polynomial() ? "true" : "false") << ",\"classes\":[";
    for (std::size_t c = 0; c < fit.classes.size(); ++c) {
      if (c) out << ",";
      const auto& cls = fit.classes[c];
      out << "{\"residue\":" << cls.residue << ",\"verdict\":\""
          << (cls.polynomial ? "polynomial" : "non-polynomial") << "\"";
      if (cls.polynomial) {
        out << ",\"poly\":[";
        for (std::size_t t = 0; t < cls.poly.size(); ++t) {
          if (t) out << ",";
          append_escaped(out, cls.poly[t].str());
        }
        out << "],\"degree\":"
            << (cls.poly.empty() ? 0 : cls.poly.size() - 1);
      } else {
        out << ",\"failing_primes\":[";
        for (std::size_t t = 0; t < cls.failing_primes.size(); ++t) {
          if (t) out << ",";
          out << cls.failing_primes[t];
        }
        out << "]";
      }
      out << ",\"samples\":" << cls.sample_count << "}";
    }
    out << "]}";
  }
  out << "]}\n";
  return out.str();
}

}  // namespace fpzeta
