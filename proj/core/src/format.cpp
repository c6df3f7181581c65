#include "z2n/format.hpp"

namespace z2n {

namespace {

struct Piece {
  bool negative;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].negative) out += "-";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

/// Monomial factors x^alpha xi^key in coordinate order, empty for 1.
std::string monomial_factors(const ChartSpec& chart, const Exponents& alpha, const XiKey& key) {
  std::string out;
  auto put = [&](const std::string& name, std::uint32_t e) {
    if (!e) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < alpha.size(); ++i) put(chart.coordinate(i).name, alpha[i]);
  for (std::size_t j = 0; j < key.size(); ++j) put(chart.coordinate(chart.p() + j).name, key[j]);
  return out;
}

std::vector<Piece> series_pieces(const GradedSeries& f) {
  const ChartSpec& chart = *f.chart();
  std::vector<Piece> pieces;
  for (const auto& [key, poly] : f.terms()) {
    for (const auto& [alpha, c] : poly.terms()) {
      const Rational mag = abs(c);
      const std::string mono = monomial_factors(chart, alpha, key);
      std::string body;
      if (mono.empty()) {
        body = to_string(mag);
      } else if (mag == 1) {
        body = mono;
      } else {
        body = to_string(mag) + "*" + mono;
      }
      pieces.push_back({c < 0, std::move(body)});
    }
  }
  return pieces;
}

}  // namespace

std::string to_string(const GradedSeries& f) { return join(series_pieces(f)); }

std::string derivative_string(const ChartSpec& chart, const MultiIndex& index) {
  std::string out;
  for (std::size_t c = index.size(); c-- > 0;) {
    if (!index[c]) continue;
    if (!out.empty()) out += '*';
    out += "d" + chart.coordinate(c).name;
    if (index[c] > 1) out += "^" + std::to_string(index[c]);
  }
  return out;
}

std::string to_string(const DiffOperator& d) {
  const ChartSpec& chart = *d.chart();
  std::vector<Piece> pieces;
  for (const auto& [index, coef] : d.terms()) {
    const std::string deriv = derivative_string(chart, index);
    auto parts = series_pieces(coef);
    if (deriv.empty()) {
      pieces.insert(pieces.end(), parts.begin(), parts.end());
    } else if (parts.size() == 1) {
      Piece p = parts.front();
      p.body = p.body == "1" ? deriv : p.body + "*" + deriv;
      pieces.push_back(std::move(p));
    } else {
      pieces.push_back({false, "(" + join(parts) + ")*" + deriv});
    }
  }
  return join(pieces);
}

std::string to_string(const ChartSpec& chart) {
  std::string out = "chart ";
  if (!chart.name().empty()) out += chart.name() + " ";
  out += "{ n=" + std::to_string(chart.n()) + " x:" + std::to_string(chart.p());
  const auto nonzero = chart.degrees().nonzero();
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    if (!chart.q()[i]) continue;
    out += parity(nonzero[i]) == Parity::Even ? " eta[" : " zeta[";
    out += nonzero[i].to_string() + "]:" + std::to_string(chart.q()[i]);
  }
  out += " trunc=" + std::to_string(chart.trunc()) + " }";
  return out;
}

std::string to_string(const MorphismSpec& phi) {
  const auto label = [](const ChartSpec& c, const char* fallback) {
    return c.name().empty() ? std::string(fallback) : c.name();
  };
  std::string out = "morphism " + label(*phi.source(), "source") + " -> " +
                    label(*phi.target(), "target") + "\n";
  for (std::size_t b = 0; b < phi.images().size(); ++b) {
    out += "  " + phi.target()->coordinate(b).name + " <- " + to_string(phi.image(b)) + ";\n";
  }
  return out;
}

std::string to_string(const CompactBox& box) { return box.domain().to_string(); }

std::string tuple_string(const std::vector<std::uint32_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string to_string(const SeminormSpec& s) {
  const std::string box = " box=" + to_string(s.box) + " grid=" + std::to_string(s.box.grid());
  switch (s.kind) {
    case SeminormKind::CD:
      return "pCD" + box + " op=" + to_string(*s.op);
    case SeminormKind::Cab:
      return "pCab" + box + " alpha=" + tuple_string(s.alpha) + " beta=" + tuple_string(s.beta);
    case SeminormKind::Rho:
      return "rho" + box + " m=" + std::to_string(s.m) + " mu=" + std::to_string(s.mu);
    case SeminormKind::Base:
      return "base" + box + " beta=" + tuple_string(s.beta) + " op=" + to_string(*s.op);
  }
  return {};
}

}  // namespace z2n
