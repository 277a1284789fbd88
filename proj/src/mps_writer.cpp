#include "cfe/mps_writer.hpp"

#include <cstdio>

namespace cfe {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

char sense_char(RowSense s) {
  switch (s) {
    case RowSense::LE: return 'L';
    case RowSense::EQ: return 'E';
    case RowSense::GE: return 'G';
  }
  return 'L';
}

}  // namespace

std::string emit_mps(const LinearModel& model, const std::string& name) {
  const int n = model.num_variables();
  const int m = model.num_constraints();

  // Column-major view of the constraint matrix, insertion order preserved
  // within each column.
  std::vector<std::vector<std::pair<int, double>>> cols(n);
  for (int r = 0; r < m; ++r)
    for (const auto& [var, coeff] : model.constraint(r).coeffs)
      if (coeff != 0.0) cols[var].emplace_back(r, coeff);

  std::string out;
  out.reserve(256 + 48 * static_cast<size_t>(n + m));
  out += "NAME " + name + "\n";
  out += "ROWS\n";
  out += " N COST\n";
  for (int r = 0; r < m; ++r) {
    const auto& row = model.constraint(r);
    out += ' ';
    out += sense_char(row.sense);
    out += ' ' + row.name + '\n';
  }

  out += "COLUMNS\n";
  bool in_integer = false;
  int marker_count = 0;
  for (int j = 0; j < n; ++j) {
    const auto& var = model.variable(j);
    const bool integer = var.kind == VarKind::Binary;
    if (integer != in_integer) {
      out += " MK" + std::to_string(marker_count++) + " 'MARKER' " +
             (integer ? "'INTORG'" : "'INTEND'") + "\n";
      in_integer = integer;
    }
    bool emitted = false;
    if (model.objective()[j] != 0.0) {
      out += ' ' + var.name + " COST " + fmt(model.objective()[j]) + '\n';
      emitted = true;
    }
    for (const auto& [r, coeff] : cols[j]) {
      out += ' ' + var.name + ' ' + model.constraint(r).name + ' ' +
             fmt(coeff) + '\n';
      emitted = true;
    }
    // Every column must appear at least once.
    if (!emitted) out += ' ' + var.name + " COST 0\n";
  }
  if (in_integer)
    out += " MK" + std::to_string(marker_count++) + " 'MARKER' 'INTEND'\n";

  out += "RHS\n";
  for (int r = 0; r < m; ++r) {
    const auto& row = model.constraint(r);
    if (row.rhs != 0.0)
      out += " RHS " + row.name + ' ' + fmt(row.rhs) + '\n';
  }
  // MPS convention: objective constant is the negated RHS of the cost row.
  if (model.objective_constant() != 0.0)
    out += " RHS COST " + fmt(-model.objective_constant()) + '\n';

  out += "BOUNDS\n";
  for (int j = 0; j < n; ++j) {
    const auto& var = model.variable(j);
    const bool lo_inf = var.lower <= -kInfinity;
    const bool up_inf = var.upper >= kInfinity;
    if (!lo_inf && !up_inf && var.lower == var.upper) {
      out += " FX BND " + var.name + ' ' + fmt(var.lower) + '\n';
      continue;
    }
    if (lo_inf && up_inf) {
      out += " FR BND " + var.name + '\n';
      continue;
    }
    if (lo_inf)
      out += " MI BND " + var.name + '\n';
    else if (var.lower != 0.0 || var.kind == VarKind::Binary)
      out += " LO BND " + var.name + ' ' + fmt(var.lower) + '\n';
    if (!up_inf)
      out += " UP BND " + var.name + ' ' + fmt(var.upper) + '\n';
  }
  out += "ENDATA\n";
  return out;
}

}  // namespace cfe
