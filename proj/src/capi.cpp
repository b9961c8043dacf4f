// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/commlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "commlab/algebra.hpp"
#include "commlab/error.hpp"
#include "commlab/report.hpp"

struct cl_algebra {
  commlab::Algebra alg;
};

namespace {

thread_local std::string last_error;

cl_status fail(cl_status status, const char* message) {
  last_error = message;
  return status;
}

cl_status status_of(commlab::ErrorKind kind) {
  switch (kind) {
    case commlab::ErrorKind::Parse:
      return CL_ERR_PARSE;
    case commlab::ErrorKind::Validation:
      return CL_ERR_VALIDATION;
    case commlab::ErrorKind::Budget:
      return CL_ERR_BUDGET;
    case commlab::ErrorKind::NotInCommutator:
      return CL_ERR_NOT_IN_COMMUTATOR;
    case commlab::ErrorKind::Internal:
      return CL_ERR_INTERNAL;
  }
  return CL_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
cl_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CL_OK;
  } catch (const commlab::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CL_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(CL_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

commlab::ReportOptions report_options(const cl_options* opts) {
  commlab::ReportOptions out;
  if (opts) {
    out.closure.budget = opts->closure_budget;
    out.lattice_budget = opts->lattice_budget;
    out.ceq_budget = opts->ceq_budget;
  }
  return out;
}

bool porcelain(const cl_options* opts) { return opts && opts->porcelain; }

#define CL_REQUIRE(cond)                                                        \
  do {                                                                          \
    if (!(cond)) return fail(CL_ERR_ARGUMENT, "invalid argument: " #cond);      \
  } while (0)

}  // namespace

extern "C" {

void cl_options_init(cl_options* opts) {
  if (!opts) return;
  opts->closure_budget = commlab::kDefaultClosureBudget;
  opts->lattice_budget = commlab::kDefaultLatticeBudget;
  opts->ceq_budget = commlab::ceq::kDefaultCeqBudget;
  opts->porcelain = 0;
}

const char* cl_version(void) { return "0.1.0"; }

const char* cl_last_error(void) { return last_error.c_str(); }

void cl_string_free(char* s) { std::free(s); }

cl_status cl_algebra_parse(const char* text, cl_algebra** out) {
  CL_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] { *out = new cl_algebra{commlab::parse_algebra(text)}; });
}

cl_status cl_algebra_load(const char* path, cl_algebra** out) {
  CL_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { *out = new cl_algebra{commlab::load_algebra(path)}; });
}

void cl_algebra_free(cl_algebra* alg) { delete alg; }

size_t cl_algebra_size(const cl_algebra* alg) { return alg ? alg->alg.size() : 0; }

cl_status cl_algebra_format(const cl_algebra* alg, char** out) {
  CL_REQUIRE(alg && out);
  return guarded([&] { *out = copy_string(commlab::format_algebra(alg->alg)); });
}

cl_status cl_report_con(const cl_algebra* alg, const cl_options* opts, char** out) {
  CL_REQUIRE(alg && out);
  return guarded([&] {
    *out = copy_string(commlab::con_report(alg->alg, report_options(opts)).render(porcelain(opts)));
  });
}

cl_status cl_commutator(const cl_algebra* alg, const char* alpha, const char* beta,
                        const char* kind, const cl_options* opts, char** out) {
  CL_REQUIRE(alg && alpha && beta && kind && out);
  return guarded([&] {
    auto k = commlab::parse_commutator_kind(kind);
    auto a = commlab::parse_congruence(alg->alg, alpha, "alpha");
    auto b = commlab::parse_congruence(alg->alg, beta, "beta");
    *out = copy_string(
        commlab::commutator_of_kind(alg->alg, a, b, k, report_options(opts)).to_string() + "\n");
  });
}

cl_status cl_report_chain(const cl_algebra* alg, const char* alpha, const char* beta,
                          const cl_options* opts, char** out) {
  CL_REQUIRE(alg && alpha && beta && out);
  return guarded([&] {
    auto a = commlab::parse_congruence(alg->alg, alpha, "alpha");
    auto b = commlab::parse_congruence(alg->alg, beta, "beta");
    *out = copy_string(
        commlab::chain_report(alg->alg, a, b, report_options(opts)).render(porcelain(opts)));
  });
}

cl_status cl_report_witness(const cl_algebra* alg, const char* alpha, const char* beta,
                            unsigned u, unsigned v, int verify, const cl_options* opts,
                            char** out) {
  CL_REQUIRE(alg && alpha && beta && out);
  return guarded([&] {
    auto a = commlab::parse_congruence(alg->alg, alpha, "alpha");
    auto b = commlab::parse_congruence(alg->alg, beta, "beta");
    if (u >= alg->alg.size() || v >= alg->alg.size()) {
      throw commlab::ValidationError("pair element out of range");
    }
    *out = copy_string(commlab::witness_report(alg->alg, a, b, u, v, verify != 0,
                                               report_options(opts))
                           .render(porcelain(opts)));
  });
}

cl_status cl_report_classify(const cl_algebra* alg, const cl_options* opts, char** out) {
  CL_REQUIRE(alg && out);
  return guarded([&] {
    *out = copy_string(
        commlab::classify_report(alg->alg, report_options(opts)).render(porcelain(opts)));
  });
}

cl_status cl_report_delta(const cl_algebra* alg, const char* delta, const char* alpha,
                          const char* beta, const cl_options* opts, char** out) {
  CL_REQUIRE(alg && delta && out);
  CL_REQUIRE((alpha == nullptr) == (beta == nullptr));
  return guarded([&] {
    auto d = commlab::parse_congruence(alg->alg, delta, "delta");
    std::optional<commlab::Partition> a, b;
    if (alpha) {
      a = commlab::parse_congruence(alg->alg, alpha, "alpha");
      b = commlab::parse_congruence(alg->alg, beta, "beta");
    }
    *out = copy_string(commlab::delta_report(alg->alg, d, a ? &*a : nullptr, b ? &*b : nullptr,
                                             report_options(opts))
                           .render(porcelain(opts)));
  });
}

cl_status cl_report_taylor(const cl_algebra* alg, size_t max_arity, size_t alphabet,
                           const cl_options* opts, char** out) {
  CL_REQUIRE(alg && out);
  return guarded([&] {
    *out = copy_string(commlab::taylor_report(alg->alg, max_arity, alphabet, report_options(opts))
                           .render(porcelain(opts)));
  });
}

cl_status cl_report_wdiff(const cl_algebra* alg, const cl_options* opts, char** out) {
  CL_REQUIRE(alg && out);
  return guarded([&] {
    *out = copy_string(
        commlab::wdiff_report(alg->alg, report_options(opts)).render(porcelain(opts)));
  });
}

cl_status cl_report_ceq(const cl_algebra* alg, const char* statement, int commutators,
                        const cl_options* opts, char** out, int* holds) {
  CL_REQUIRE(alg && statement && out);
  return guarded([&] {
    commlab::ceq::ParseOptions po;
    po.commutators = commutators != 0;
    auto s = commlab::ceq::parse_statement(statement, po);
    bool ok = true;
    *out = copy_string(
        commlab::ceq_report(alg->alg, s, report_options(opts), &ok).render(porcelain(opts)));
    if (holds) *holds = ok ? 1 : 0;
  });
}

cl_status cl_report_synth(const char* data, int counterexample, const cl_options* opts,
                          char** out) {
  CL_REQUIRE(data && out);
  return guarded([&] {
    auto d = commlab::parse_inclusion_data(data);
    *out = copy_string(commlab::synth_report(d, counterexample != 0).render(porcelain(opts)));
  });
}

}  // extern "C"
