#include "surgery/parabolic.hpp"

#include <json.hpp>
#include <sstream>

#include "surgery/errors.hpp"

namespace surgery::parab {

ParabolicLine make_line(MarkedSurface base, int a, int b, int extra_deg, Rat weight) {
  ParabolicLine line{base, a, b, extra_deg, std::move(weight)};
  Rat shift = floor_rat(line.weight);
  if (shift != 0) {
    line.weight -= shift;
    line.b += static_cast<int>(to_long(shift));
  }
  return line;
}

Rat pardeg(const ParabolicLine& line) {
  return rat(line.plain_degree()) + line.weight * rat(line.base.s);
}

Rat pardeg(const ParabolicBundle& bundle) {
  Rat total = rat(0);
  for (const auto& line : bundle.summands) total += pardeg(line);
  return total;
}

Rat parslope(const ParabolicBundle& bundle) {
  if (bundle.summands.empty()) throw InvalidParameter("slope of an empty bundle");
  return pardeg(bundle) / rat(bundle.rank());
}

ParabolicLine dual(const ParabolicLine& line) {
  return make_line(line.base, -line.a, -line.b, -line.extra_deg, -line.weight);
}

ParabolicLine tensor(const ParabolicLine& l1, const ParabolicLine& l2) {
  if (!(l1.base == l2.base)) throw InvalidParameter("tensor of lines over different bases");
  return make_line(l1.base, l1.a + l2.a, l1.b + l2.b, l1.extra_deg + l2.extra_deg,
                   l1.weight + l2.weight);
}

ParabolicBundle sym_power(const ParabolicBundle& rank2, int n) {
  if (rank2.rank() != 2) throw InvalidParameter("sym_power requires a rank-2 bundle");
  if (n < 0) throw InvalidParameter("sym_power requires n >= 0");
  const ParabolicLine& l1 = rank2.summands[0];
  const ParabolicLine& l2 = rank2.summands[1];
  if (!(l1.base == l2.base)) throw InvalidParameter("summands over different bases");

  ParabolicBundle out;
  for (int k = 0; k <= n; ++k) {
    ParabolicLine term = make_line(l1.base, 0, 0, 0, rat(0));
    for (int m = 0; m < n - k; ++m) term = tensor(term, l1);
    for (int m = 0; m < k; ++m) term = tensor(term, l2);
    out.summands.push_back(term);
  }
  return out;
}

MetricExponents metric_exponents(const ParabolicLine& line, int filtration_level) {
  return {line.weight, rat(filtration_level, 2)};
}

std::string ParabolicLine::str() const {
  std::ostringstream os;
  bool wrote = false;
  if (a != 0) {
    os << "K^" << a;
    wrote = true;
  }
  if (b != 0) {
    os << (wrote ? " " : "") << "O(" << b << "D)";
    wrote = true;
  }
  if (extra_deg != 0) {
    os << (wrote ? " " : "") << "deg(" << extra_deg << ")";
    wrote = true;
  }
  if (!wrote) os << "O";
  if (weight != 0) os << " wt " << weight.get_str();
  return os.str();
}

std::string to_json(const ParabolicBundle& bundle) {
  nlohmann::json j;
  if (!bundle.summands.empty()) {
    for (const auto& line : bundle.summands)
      if (!(line.base == bundle.summands.front().base))
        throw InvalidParameter("bundle summands live over different bases");
    j["genus"] = bundle.summands.front().base.genus;
    j["s"] = bundle.summands.front().base.s;
  }
  auto arr = nlohmann::json::array();
  for (const auto& line : bundle.summands) {
    auto [wn, wd] = to_pair(line.weight);
    arr.push_back({{"a", line.a},
                   {"b", line.b},
                   {"extra_deg", line.extra_deg},
                   {"weight", {wn, wd}}});
  }
  j["summands"] = arr;
  return j.dump();
}

ParabolicBundle bundle_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  MarkedSurface base{j.at("genus").get<int>(), j.at("s").get<int>()};
  ParabolicBundle bundle;
  for (const auto& item : j.at("summands")) {
    const auto& w = item.at("weight");
    bundle.summands.push_back(make_line(base, item.at("a").get<int>(), item.at("b").get<int>(),
                                        item.at("extra_deg").get<int>(),
                                        rat(w.at(0).get<long>(), w.at(1).get<long>())));
  }
  return bundle;
}

}  // namespace surgery::parab
