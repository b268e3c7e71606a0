#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/grid.hpp"

namespace dunkl {

namespace {

struct FamilySpec {
  Family family;
  const char* name;
  std::size_t arity;
};

constexpr std::array<FamilySpec, 5> kFamilies{{
    {Family::gaussian, "gaussian", 1},
    {Family::indicator_ball, "indicator_ball", 1},
    {Family::bump, "bump", 2},
    {Family::power_tail, "power_tail", 2},
    {Family::trig_gauss, "trig_gauss", 1},
}};

const FamilySpec& spec_of(Family f) {
  for (const auto& s : kFamilies)
    if (s.family == f) return s;
  throw DomainError("unknown family");
}

// Frequencies and phases of trig_gauss(seed); mt19937_64 output is fully
// specified by the standard, so the draw is portable.
std::array<double, 4> trig_parameters(double seed) {
  std::mt19937_64 engine(static_cast<std::uint64_t>(seed));
  auto unit = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  const double w1 = 0.5 + 2.5 * unit();
  const double p1 = 2.0 * std::numbers::pi * unit();
  const double w2 = 0.5 + 2.5 * unit();
  const double p2 = 2.0 * std::numbers::pi * unit();
  return {w1, p1, w2, p2};
}

void validate(const FamilyMember& m) {
  const auto& s = spec_of(m.family);
  if (m.params.size() != s.arity)
    throw DomainError(std::string(s.name) + " expects " + std::to_string(s.arity) + " parameter(s)");
  for (double p : m.params)
    if (!std::isfinite(p)) throw DomainError("family parameters must be finite");
  switch (m.family) {
    case Family::gaussian:
      if (!(m.params[0] > 0.0)) throw DomainError("gaussian(a) needs a > 0");
      break;
    case Family::indicator_ball:
      if (!(m.params[0] > 0.0)) throw DomainError("indicator_ball(r) needs r > 0");
      break;
    case Family::bump:
      if (!(m.params[1] > 0.0)) throw DomainError("bump(center, width) needs width > 0");
      break;
    case Family::power_tail:
      if (!(m.params[0] >= 0.0) || !(m.params[1] > 0.0))
        throw DomainError("power_tail(beta, cutoff) needs beta >= 0 and cutoff > 0");
      break;
    case Family::trig_gauss:
      if (m.params[0] < 0.0 || m.params[0] != std::floor(m.params[0]))
        throw DomainError("trig_gauss(seed) needs a non-negative integer seed");
      break;
  }
}

}  // namespace

std::string family_name(Family family) { return spec_of(family).name; }

std::string FamilyMember::label() const {
  std::ostringstream os;
  os.precision(6);
  os << family_name(family) << '(';
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ')';
  return os.str();
}

FamilyMember FamilyMember::parse(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != text.size())
    throw DomainError("family spec must look like name(p1,...): " + text);
  const std::string name = text.substr(0, open);
  const FamilySpec* found = nullptr;
  for (const auto& s : kFamilies)
    if (name == s.name) found = &s;
  if (!found) throw DomainError("unknown family id: " + name);

  FamilyMember m{found->family, {}};
  std::stringstream body(text.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad family parameter: " + item);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw DomainError("bad family parameter: " + item);
    m.params.push_back(v);
  }
  validate(m);
  return m;
}

double FamilyMember::evaluate(double x) const {
  validate(*this);
  switch (family) {
    case Family::gaussian:
      return std::exp(-params[0] * x * x);
    case Family::indicator_ball:
      return std::abs(x) < params[0] ? 1.0 : 0.0;
    case Family::bump: {
      const double t = (x - params[0]) / params[1];
      return std::abs(t) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - t * t)) : 0.0;
    }
    case Family::power_tail:
      return std::abs(x) > params[1] ? std::pow(std::abs(x), -params[0]) : 0.0;
    case Family::trig_gauss: {
      const auto [w1, p1, w2, p2] = trig_parameters(params[0]);
      return std::exp(-x * x / 8.0) * (std::cos(w1 * x + p1) + 0.5 * std::sin(w2 * x + p2));
    }
  }
  return 0.0;
}

GridFunction sample_family(const FamilyMember& member, const GridPtr& grid) {
  validate(member);
  std::vector<double> v(static_cast<std::size_t>(grid->size()));
  if (member.family == Family::trig_gauss) {
    const auto [w1, p1, w2, p2] = trig_parameters(member.params[0]);
    for (int j = 0; j < grid->size(); ++j) {
      const double x = grid->node(j);
      v[static_cast<std::size_t>(j)] = std::exp(-x * x / 8.0) * (std::cos(w1 * x + p1) + 0.5 * std::sin(w2 * x + p2));
    }
  } else {
    for (int j = 0; j < grid->size(); ++j) v[static_cast<std::size_t>(j)] = member.evaluate(grid->node(j));
  }
  return GridFunction(grid, v);
}

GridFunction sample_family(const std::string& name, const std::vector<double>& params, const GridPtr& grid) {
  for (const auto& s : kFamilies)
    if (name == s.name) return sample_family(FamilyMember{s.family, params}, grid);
  throw DomainError("unknown family id: " + name);
}

std::vector<FamilyMember> default_family() {
  return {
      {Family::gaussian, {0.25}},      {Family::gaussian, {0.5}},        {Family::gaussian, {2.0}},
      {Family::indicator_ball, {0.5}}, {Family::indicator_ball, {1.0}},  {Family::indicator_ball, {2.0}},
      {Family::bump, {1.0, 2.0}},      {Family::power_tail, {1.5, 1.0}}, {Family::trig_gauss, {1.0}},
      {Family::trig_gauss, {2.0}},     {Family::trig_gauss, {3.0}},
  };
}

}  // namespace dunkl
