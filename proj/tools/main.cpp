// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// commlab: command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commlab/commlab.h"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;  // counterexample / pair not in the commutator
constexpr int kInputError = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

int exit_code(cl_status s) {
  switch (s) {
    case CL_OK:
      return kOk;
    case CL_ERR_NOT_IN_COMMUTATOR:
      return kNegative;
    case CL_ERR_PARSE:
    case CL_ERR_VALIDATION:
    case CL_ERR_ARGUMENT:
      return kInputError;
    case CL_ERR_BUDGET:
      return kBudget;
    case CL_ERR_INTERNAL:
      return kInternal;
  }
  return kInternal;
}

int report_error(cl_status s) {
  std::cerr << "error: " << cl_last_error() << "\n";
  return exit_code(s);
}

struct AlgebraDeleter {
  void operator()(cl_algebra* a) const { cl_algebra_free(a); }
};
using AlgebraHandle = std::unique_ptr<cl_algebra, AlgebraDeleter>;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Prints and frees a returned string.
void emit(char* text) {
  if (!text) return;
  std::fputs(text, stdout);
  cl_string_free(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutators, witnesses and congruence equations for finite algebras"};
  app.require_subcommand(1);

  cl_options opts;
  cl_options_init(&opts);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Emit key<TAB>value lines");
  app.add_option("--closure-budget", opts.closure_budget, "Maximum tuples per closure");
  app.add_option("--lattice-budget", opts.lattice_budget, "Maximum congruences per lattice");
  app.add_option("--ceq-budget", opts.ceq_budget, "Work limit for congruence equation checks");

  std::string file, alpha, beta, kind = "tc", pair, delta, eqfile, datafile;
  bool verify = false, counterexample = false, commutators = false;
  std::size_t max_arity = 3, alphabet = 2;

  auto* con = app.add_subcommand("con", "Congruence lattice");
  con->add_option("FILE", file, "Algebra file")->required();

  auto* comm = app.add_subcommand("comm", "One commutator");
  comm->add_option("FILE", file)->required();
  comm->add_option("--alpha", alpha)->required();
  comm->add_option("--beta", beta)->required();
  comm->add_option("--kind", kind, "tc, sym or lin")->check(CLI::IsMember({"tc", "sym", "lin"}));

  auto* chain = app.add_subcommand("chain", "Compare the three commutators with the meet");
  chain->add_option("FILE", file)->required();
  chain->add_option("--alpha", alpha)->required();
  chain->add_option("--beta", beta)->required();

  auto* witness = app.add_subcommand("witness", "Witness that a pair is in the linear commutator");
  witness->add_option("FILE", file)->required();
  witness->add_option("--alpha", alpha)->required();
  witness->add_option("--beta", beta)->required();
  witness->add_option("--pair", pair, "u,v")->required();
  witness->add_flag("--verify", verify, "Re-check the printed witness");

  auto* classify = app.add_subcommand("classify", "Abelian / quasi-affine / affine");
  classify->add_option("FILE", file)->required();

  auto* dlt = app.add_subcommand("delta", "Largest congruence of the square avoiding the diagonal");
  dlt->add_option("FILE", file)->required();
  dlt->add_option("--delta", delta)->required();
  auto* da = dlt->add_option("--alpha", alpha, "With --beta: also run the square criterion");
  auto* db = dlt->add_option("--beta", beta);
  da->needs(db);
  db->needs(da);

  auto* taylor = app.add_subcommand("taylor", "Search for an idempotent term with x/y identities");
  taylor->add_option("FILE", file)->required();
  taylor->add_option("--max-arity", max_arity)->check(CLI::Range(2, 8));
  taylor->add_option("--alphabet", alphabet, "Alphabet for the separating-identity check")
      ->check(CLI::Range(1, 6));

  auto* wdiff = app.add_subcommand("wdiff", "Search for a weak difference term");
  wdiff->add_option("FILE", file)->required();

  auto* ceq = app.add_subcommand("ceq", "Check a congruence equation on all congruences");
  ceq->add_option("FILE", file)->required();
  ceq->add_option("EQFILE", eqfile)->required();
  ceq->add_flag("--commutators", commutators, "Allow [x,y] atoms");

  auto* synth = app.add_subcommand("synth", "Congruence inclusion from two-variable identities");
  synth->alias("synth46");
  synth->add_option("DATAFILE", datafile)->required();
  synth->add_flag("--counterexample", counterexample, "Evaluate on the operation-free structure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  opts.porcelain = porcelain ? 1 : 0;

  if (synth->parsed()) {
    std::string text;
    if (!read_file(datafile, text)) {
      std::cerr << "error: cannot read " << datafile << "\n";
      return kInputError;
    }
    char* out = nullptr;
    cl_status s = cl_report_synth(text.c_str(), counterexample ? 1 : 0, &opts, &out);
    if (s != CL_OK) return report_error(s);
    emit(out);
    return kOk;
  }

  cl_algebra* raw = nullptr;
  cl_status s = cl_algebra_load(file.c_str(), &raw);
  if (s != CL_OK) return report_error(s);
  AlgebraHandle alg(raw);

  char* out = nullptr;
  int result = kOk;
  if (con->parsed()) {
    s = cl_report_con(alg.get(), &opts, &out);
  } else if (comm->parsed()) {
    s = cl_commutator(alg.get(), alpha.c_str(), beta.c_str(), kind.c_str(), &opts, &out);
  } else if (chain->parsed()) {
    s = cl_report_chain(alg.get(), alpha.c_str(), beta.c_str(), &opts, &out);
  } else if (witness->parsed()) {
    unsigned u = 0, v = 0;
    char sep = 0;
    std::istringstream in(pair);
    std::string rest;
    if (!(in >> u >> sep >> v) || sep != ',' || (in >> rest)) {
      std::cerr << "error: --pair must be u,v\n";
      return kInputError;
    }
    s = cl_report_witness(alg.get(), alpha.c_str(), beta.c_str(), u, v, verify ? 1 : 0, &opts,
                          &out);
  } else if (classify->parsed()) {
    s = cl_report_classify(alg.get(), &opts, &out);
  } else if (dlt->parsed()) {
    const bool square = !alpha.empty() || !beta.empty();
    s = cl_report_delta(alg.get(), delta.c_str(), square ? alpha.c_str() : nullptr,
                        square ? beta.c_str() : nullptr, &opts, &out);
  } else if (taylor->parsed()) {
    s = cl_report_taylor(alg.get(), max_arity, alphabet, &opts, &out);
  } else if (wdiff->parsed()) {
    s = cl_report_wdiff(alg.get(), &opts, &out);
  } else if (ceq->parsed()) {
    std::string text;
    if (!read_file(eqfile, text)) {
      std::cerr << "error: cannot read " << eqfile << "\n";
      return kInputError;
    }
    int holds = 1;
    s = cl_report_ceq(alg.get(), text.c_str(), commutators ? 1 : 0, &opts, &out, &holds);
    if (s == CL_OK && !holds) result = kNegative;
  }
  if (s != CL_OK) return report_error(s);
  emit(out);
  return result;
}
