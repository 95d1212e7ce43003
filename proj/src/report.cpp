#include "rgvss/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <limits>
#include <sstream>

namespace rgvss::report {

Format parse_format(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "markdown" || lower == "md" || lower == "text") return Format::kMarkdown;
  if (lower == "csv") return Format::kCsv;
  if (lower == "json") return Format::kJson;
  throw ParameterError("unknown format '" + std::string(text) + "' (want markdown|csv|json)");
}

namespace {

nlohmann::json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::string frac(const Ratio& r) { return r.str() + " (" + r.decimal() + ")"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string sigma(double z) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", z);
  return buf;
}

// Scheme text contains a comma, so quote it in CSV.
std::string csv_scheme(const SchemeParams& s) { return "\"" + s.str() + "\""; }

}  // namespace

nlohmann::json fraction_json(const Ratio& r) {
  return nlohmann::json{{"num", big_json(r.num())}, {"den", big_json(r.den())}};
}

std::string contrast_table(const std::vector<analytic::ContrastRow>& rows, Format format,
                           bool show_transmissions) {
  std::ostringstream out;
  switch (format) {
    case Format::kCsv:
      out << "t,alpha_or,alpha_xor,alpha_or_decimal,alpha_xor_decimal";
      if (show_transmissions) out << ",t0_or,t1_or,t0_xor,t1_xor";
      out << '\n';
      for (const auto& r : rows) {
        out << r.t << ',' << r.alpha_or << ',' << r.alpha_xor << ',' << r.alpha_or.decimal() << ','
            << r.alpha_xor.decimal();
        if (show_transmissions) {
          out << ',' << r.t0_or << ',' << r.t1_or << ',' << r.t0_xor << ',' << r.t1_xor;
        }
        out << '\n';
      }
      break;
    case Format::kJson: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json row{{"scheme", {{"k", r.scheme.k}, {"n", r.scheme.n}}},
                           {"t", r.t},
                           {"alpha_or", fraction_json(r.alpha_or)},
                           {"alpha_xor", fraction_json(r.alpha_xor)}};
        if (show_transmissions) {
          row["t0_or"] = fraction_json(r.t0_or);
          row["t1_or"] = fraction_json(r.t1_or);
          row["t0_xor"] = fraction_json(r.t0_xor);
          row["t1_xor"] = fraction_json(r.t1_xor);
        }
        doc.push_back(std::move(row));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kMarkdown:
      if (!rows.empty()) out << "Scheme " << rows.front().scheme.str() << "\n\n";
      out << "| t | alpha OR | alpha XOR |";
      if (show_transmissions) out << " T0 OR | T1 OR | T0 XOR | T1 XOR |";
      out << "\n|---|---|---|";
      if (show_transmissions) out << "---|---|---|---|";
      out << '\n';
      for (const auto& r : rows) {
        out << "| " << r.t << " | " << frac(r.alpha_or) << " | " << frac(r.alpha_xor) << " |";
        if (show_transmissions) {
          out << ' ' << r.t0_or << " | " << r.t1_or << " | " << r.t0_xor << " | " << r.t1_xor
              << " |";
        }
        out << '\n';
      }
      break;
  }
  return out.str();
}

std::string corrigendum(const std::vector<analytic::CorrigendumRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kCsv:
      out << "scheme,t,claimed_or,claimed_xor,corrected_or,corrected_xor,or_match,xor_match\n";
      for (const auto& r : rows) {
        out << csv_scheme(r.scheme) << ',' << r.t << ',' << r.claimed_or << ',' << r.claimed_xor
            << ',' << r.corrected_or << ',' << r.corrected_xor << ','
            << (r.or_match ? "true" : "false") << ',' << (r.xor_match ? "true" : "false") << '\n';
      }
      break;
    case Format::kJson: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : rows) {
        doc.push_back({{"scheme", {{"k", r.scheme.k}, {"n", r.scheme.n}}},
                       {"t", r.t},
                       {"claimed_or", fraction_json(r.claimed_or)},
                       {"claimed_xor", fraction_json(r.claimed_xor)},
                       {"corrected_or", fraction_json(r.corrected_or)},
                       {"corrected_xor", fraction_json(r.corrected_xor)},
                       {"or_match", r.or_match},
                       {"xor_match", r.xor_match}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kMarkdown: {
      out << "| scheme | t | claimed OR | claimed XOR | corrected OR | corrected XOR | OR match | "
             "XOR match |\n";
      out << "|---|---|---|---|---|---|---|---|\n";
      int flagged = 0;
      for (const auto& r : rows) {
        out << "| " << r.scheme.str() << " | " << r.t << " | " << r.claimed_or << " | "
            << r.claimed_xor << " | " << frac(r.corrected_or) << " | " << frac(r.corrected_xor)
            << " | " << yes_no(r.or_match) << " | " << yes_no(r.xor_match) << " |\n";
        if (!r.or_match || !r.xor_match) ++flagged;
      }
      out << '\n' << flagged << " of " << rows.size() << " rows have at least one mismatch\n";
      break;
    }
  }
  return out.str();
}

std::string verify(const oracle::VerifyReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kJson: {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& e : report.entries) {
        entries.push_back({{"t", e.t},
                           {"op", std::string(to_string(e.op))},
                           {"s", to_bit(e.s)},
                           {"closed_form", fraction_json(e.closed_form)},
                           {"enumerated", fraction_json(e.enumerated)},
                           {"mc_estimate", e.monte_carlo.estimate},
                           {"mc_std_error", e.monte_carlo.std_error},
                           {"mc_white", e.monte_carlo.white_count},
                           {"z", e.z},
                           {"exact_match", e.exact_match},
                           {"subsets_agree", e.subsets_agree},
                           {"within_3sigma", e.within_3sigma},
                           {"within_5sigma", e.within_5sigma},
                           {"pass", e.pass()}});
      }
      nlohmann::json contrasts = nlohmann::json::array();
      for (const auto& c : report.contrasts) {
        contrasts.push_back({{"t", c.t},
                             {"op", std::string(to_string(c.op))},
                             {"closed_form", fraction_json(c.closed_form)},
                             {"enumerated", fraction_json(c.enumerated)}});
      }
      nlohmann::json doc{{"scheme", {{"k", report.scheme.k}, {"n", report.scheme.n}}},
                         {"trials", report.trials},
                         {"seed", report.seed},
                         {"entries", std::move(entries)},
                         {"contrasts", std::move(contrasts)},
                         {"pass", report.all_pass()}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "t,op,s,closed_form,enumerated,mc_estimate,mc_std_error,z,exact_match,"
             "subsets_agree,within_5sigma,pass\n";
      for (const auto& e : report.entries) {
        out << e.t << ',' << to_string(e.op) << ',' << to_bit(e.s) << ',' << e.closed_form << ','
            << e.enumerated << ',' << e.monte_carlo.estimate << ',' << e.monte_carlo.std_error
            << ',' << sigma(e.z) << ',' << (e.exact_match ? "true" : "false") << ','
            << (e.subsets_agree ? "true" : "false") << ','
            << (e.within_5sigma ? "true" : "false") << ',' << (e.pass() ? "true" : "false")
            << '\n';
      }
      break;
    case Format::kMarkdown:
      out << "Verification of scheme " << report.scheme.str() << " (" << report.trials
          << " Monte Carlo trials per quantity, seed " << report.seed << ")\n\n";
      out << "| t | op | s | closed form | enumerated | Monte Carlo | z | result |\n";
      out << "|---|---|---|---|---|---|---|---|\n";
      for (const auto& e : report.entries) {
        out << "| " << e.t << " | " << to_string(e.op) << " | " << to_bit(e.s) << " | "
            << e.closed_form << " | " << e.enumerated << " | " << e.monte_carlo.estimate << " +- "
            << e.monte_carlo.std_error << " | " << sigma(e.z) << " | "
            << (e.pass() ? "pass" : "FAIL") << " |\n";
      }
      out << "\n| t | op | contrast (closed form) | contrast (enumerated) |\n|---|---|---|---|\n";
      for (const auto& c : report.contrasts) {
        out << "| " << c.t << " | " << to_string(c.op) << " | " << frac(c.closed_form) << " | "
            << frac(c.enumerated) << " |\n";
      }
      out << '\n' << (report.all_pass() ? "PASS" : "FAIL") << '\n';
      break;
  }
  return out.str();
}

}  // namespace rgvss::report
