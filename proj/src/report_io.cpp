#include "canondeg/report_io.hpp"

#include <sstream>
#include <vector>

#include "canondeg/error.hpp"

namespace canondeg {

void to_json(nlohmann::json& j, const DegreeReport& r) {
  j = nlohmann::json{
      {"generators", r.generators},
      {"type", r.type},
      {"multiplicity", r.multiplicity},
      {"frobenius", r.frobenius},
      {"genus", r.genus},
      {"n_of", r.n_of},
      {"cdeg", r.cdeg},
      {"bideg", r.bideg},
      {"rho", r.rho},
      {"e1", r.e1},
      {"s0", r.s0},
      {"agl_level", r.agl_level},
      {"is_goto", r.is_goto},
      {"is_nearly_gorenstein", r.is_nearly_gorenstein},
      {"is_far_flung", r.is_far_flung},
      {"comparison_holds", r.comparison_holds},
      {"power_steps", r.power_steps},
      {"rho_by_convention", r.rho_by_convention},
  };
}

void from_json(const nlohmann::json& j, DegreeReport& r) {
  j.at("generators").get_to(r.generators);
  j.at("type").get_to(r.type);
  j.at("multiplicity").get_to(r.multiplicity);
  j.at("frobenius").get_to(r.frobenius);
  j.at("genus").get_to(r.genus);
  j.at("n_of").get_to(r.n_of);
  j.at("cdeg").get_to(r.cdeg);
  j.at("bideg").get_to(r.bideg);
  j.at("rho").get_to(r.rho);
  j.at("e1").get_to(r.e1);
  j.at("s0").get_to(r.s0);
  j.at("agl_level").get_to(r.agl_level);
  j.at("is_goto").get_to(r.is_goto);
  j.at("is_nearly_gorenstein").get_to(r.is_nearly_gorenstein);
  j.at("is_far_flung").get_to(r.is_far_flung);
  j.at("comparison_holds").get_to(r.comparison_holds);
  j.at("power_steps").get_to(r.power_steps);
  r.rho_by_convention = j.value("rho_by_convention", false);
}

void to_json(nlohmann::json& j, const HerzogMatrix& m) {
  j = nlohmann::json{
      {"order", m.order},
      {"top", m.top_row()},
      {"bottom", m.bottom_row()},
  };
}

void from_json(const nlohmann::json& j, HerzogMatrix& m) {
  j.at("order").get_to(m.order);
  const auto top = j.at("top").get<std::array<int, 3>>();
  const auto bottom = j.at("bottom").get<std::array<int, 3>>();
  m.a1 = top[0];
  m.b1 = top[1];
  m.c1 = top[2];
  m.b2 = bottom[0];
  m.c2 = bottom[1];
  m.a2 = bottom[2];
}

nlohmann::json ideal_to_json(const RelativeIdeal& e) {
  return nlohmann::json{{"min", e.min()}, {"members", e.members_below_tail()}};
}

std::string tsv_row(const DegreeReport& r) {
  std::ostringstream out;
  out << join_generators(r.generators) << '\t' << r.type << '\t' << r.multiplicity << '\t' << r.frobenius << '\t'
      << r.genus << '\t' << r.cdeg << '\t' << r.bideg << '\t' << r.rho << '\t' << r.e1 << '\t' << r.s0 << '\t'
      << r.agl_level << '\t' << r.is_goto << '\t' << r.is_nearly_gorenstein << '\t' << r.is_far_flung << '\t'
      << r.comparison_holds;
  return out.str();
}

DegreeReport parse_tsv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, '\t')) cells.push_back(cell);
  if (cells.size() != 15)
    throw SemigroupError(ErrorKind::PreconditionUnmet, "expected 15 TSV columns, got " + std::to_string(cells.size()));
  DegreeReport r;
  r.generators = parse_generators(cells[0]);
  int* ints[] = {&r.type, &r.multiplicity, &r.frobenius, &r.genus, &r.cdeg, &r.bideg, &r.rho, &r.e1, &r.s0, &r.agl_level};
  for (std::size_t i = 0; i < std::size(ints); ++i) *ints[i] = std::stoi(cells[i + 1]);
  bool* flags[] = {&r.is_goto, &r.is_nearly_gorenstein, &r.is_far_flung, &r.comparison_holds};
  for (std::size_t i = 0; i < std::size(flags); ++i) *flags[i] = cells[i + 11] == "1";
  return r;
}

}  // namespace canondeg
