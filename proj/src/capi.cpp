// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "smwt/smwt.h"

#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "generalized_inverse.hpp"
#include "sensitivity.hpp"
#include "smw_update.hpp"
#include "tensor.hpp"
#include "tensor_io.hpp"
#include "unfold.hpp"

struct smwt_tensor {
  smwt::EinsteinTensor value;
};

namespace {

thread_local std::string g_last_error;

smwt_status fail(smwt_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs `f`, translating library exceptions into status codes.
template <class F>
smwt_status call(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return SMWT_OK;
  } catch (const smwt::SingularCapacitanceError& e) {
    return fail(SMWT_ERR_SINGULAR_CAPACITANCE, e.what());
  } catch (const smwt::SingularTensorError& e) {
    return fail(SMWT_ERR_SINGULAR, e.what());
  } catch (const smwt::SingularMatrixError& e) {
    return fail(SMWT_ERR_SINGULAR, e.what());
  } catch (const smwt::NumericalError& e) {
    return fail(SMWT_ERR_NUMERICAL, e.what());
  } catch (const smwt::ShapeError& e) {
    return fail(SMWT_ERR_SHAPE, e.what());
  } catch (const smwt::IndexError& e) {
    return fail(SMWT_ERR_INDEX, e.what());
  } catch (const smwt::DomainError& e) {
    return fail(SMWT_ERR_DOMAIN, e.what());
  } catch (const smwt::DegenerateSolutionError& e) {
    return fail(SMWT_ERR_DEGENERATE, e.what());
  } catch (const smwt::ParseError& e) {
    return fail(SMWT_ERR_PARSE, e.what());
  } catch (const smwt::IoError& e) {
    return fail(SMWT_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SMWT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SMWT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SMWT_ERR_INTERNAL, "unknown error");
  }
}

#define SMWT_REQUIRE(cond)                                             \
  do {                                                                 \
    if (!(cond)) return fail(SMWT_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

smwt_tensor* wrap(smwt::EinsteinTensor t) { return new smwt_tensor{std::move(t)}; }

smwt::Dims dims_of(const size_t* d, size_t n) { return smwt::Dims(d, d + n); }

smwt::LowRankUpdate make_update(const smwt_tensor* u, const smwt_tensor* b, const smwt_tensor* v) {
  return smwt::LowRankUpdate{u->value, b->value, v->value};
}

smwt::SplitParts unwrap(const smwt_split_parts& p) {
  return smwt::SplitParts{p.X1->value, p.Y1->value, p.X2->value,
                          p.Y2->value, p.E1->value, p.E2->value};
}

bool complete(const smwt_split_parts* p) {
  return p && p->X1 && p->Y1 && p->X2 && p->Y2 && p->E1 && p->E2;
}

void store(smwt::SplitParts&& src, smwt_split_parts* dst) {
  // Allocate everything before publishing so a failure leaks nothing.
  std::vector<std::unique_ptr<smwt_tensor>> held;
  for (smwt::EinsteinTensor* t : {&src.X1, &src.Y1, &src.X2, &src.Y2, &src.E1, &src.E2}) {
    held.emplace_back(new smwt_tensor{std::move(*t)});
  }
  dst->X1 = held[0].release();
  dst->Y1 = held[1].release();
  dst->X2 = held[2].release();
  dst->Y2 = held[3].release();
  dst->E1 = held[4].release();
  dst->E2 = held[5].release();
}

void store(const smwt::ConditionReport& r, smwt_condition_report* out) {
  for (std::size_t k = 0; k < r.residuals.size(); ++k) out->residuals[k] = r.residuals[k];
  out->applicable = r.applicable ? 1 : 0;
  out->tol = r.tol;
}

smwt_bound_report to_c(const smwt::BoundReport& r) {
  return smwt_bound_report{r.alpha,  r.norm_A,  r.norm_A_pinv,
                           r.eps_A,  r.eps_D,   r.bound,
                           r.measured_error ? 1 : 0, r.measured_error.value_or(0.0)};
}

}  // namespace

extern "C" {

const char* smwt_version(void) { return SMWT_VERSION_STRING; }

const char* smwt_status_name(smwt_status status) {
  switch (status) {
    case SMWT_OK: return "ok";
    case SMWT_ERR_SHAPE: return "shape error";
    case SMWT_ERR_INDEX: return "index error";
    case SMWT_ERR_NUMERICAL: return "numerical error";
    case SMWT_ERR_SINGULAR: return "singular tensor";
    case SMWT_ERR_SINGULAR_CAPACITANCE: return "singular capacitance";
    case SMWT_ERR_DOMAIN: return "domain error";
    case SMWT_ERR_DEGENERATE: return "degenerate solution";
    case SMWT_ERR_PARSE: return "parse error";
    case SMWT_ERR_IO: return "i/o error";
    case SMWT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SMWT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* smwt_last_error(void) { return g_last_error.c_str(); }

smwt_status smwt_tensor_create(const size_t* row_dims, size_t row_order, const size_t* col_dims,
                               size_t col_order, const double* entries, smwt_tensor** out) {
  SMWT_REQUIRE(out);
  SMWT_REQUIRE(row_dims || row_order == 0);
  SMWT_REQUIRE(col_dims || col_order == 0);
  SMWT_REQUIRE(entries);
  return call([&] {
    smwt::PairedShape shape(dims_of(row_dims, row_order), dims_of(col_dims, col_order));
    std::vector<smwt::Scalar> v(shape.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = {entries[2 * k], entries[2 * k + 1]};
    *out = wrap(smwt::EinsteinTensor(std::move(shape), std::move(v)));
  });
}

smwt_status smwt_tensor_zeros(const size_t* row_dims, size_t row_order, const size_t* col_dims,
                              size_t col_order, smwt_tensor** out) {
  SMWT_REQUIRE(out);
  SMWT_REQUIRE(row_dims || row_order == 0);
  SMWT_REQUIRE(col_dims || col_order == 0);
  return call([&] {
    *out = wrap(smwt::zeros(
        smwt::PairedShape(dims_of(row_dims, row_order), dims_of(col_dims, col_order))));
  });
}

smwt_status smwt_tensor_identity(const size_t* dims, size_t order, smwt_tensor** out) {
  SMWT_REQUIRE(out);
  SMWT_REQUIRE(dims || order == 0);
  return call([&] { *out = wrap(smwt::identity(dims_of(dims, order))); });
}

smwt_status smwt_tensor_clone(const smwt_tensor* t, smwt_tensor** out) {
  SMWT_REQUIRE(t && out);
  return call([&] { *out = wrap(t->value); });
}

void smwt_tensor_free(smwt_tensor* t) { delete t; }

size_t smwt_tensor_row_order(const smwt_tensor* t) { return t ? t->value.shape().row_order() : 0; }
size_t smwt_tensor_col_order(const smwt_tensor* t) { return t ? t->value.shape().col_order() : 0; }

const size_t* smwt_tensor_row_dims(const smwt_tensor* t) {
  return t ? t->value.shape().row_dims().data() : nullptr;
}

const size_t* smwt_tensor_col_dims(const smwt_tensor* t) {
  return t ? t->value.shape().col_dims().data() : nullptr;
}

size_t smwt_tensor_size(const smwt_tensor* t) { return t ? t->value.shape().size() : 0; }

const double* smwt_tensor_data(const smwt_tensor* t) {
  // std::complex<double> is layout-compatible with double[2].
  return t ? reinterpret_cast<const double*>(t->value.entries().data()) : nullptr;
}

smwt_status smwt_tensor_at(const smwt_tensor* t, const size_t* row_index,
                           const size_t* col_index, double* re, double* im) {
  SMWT_REQUIRE(t && re && im);
  SMWT_REQUIRE(row_index || t->value.shape().row_order() == 0);
  SMWT_REQUIRE(col_index || t->value.shape().col_order() == 0);
  return call([&] {
    const smwt::PairedShape& s = t->value.shape();
    const smwt::Scalar v = t->value.at({row_index, s.row_order()}, {col_index, s.col_order()});
    *re = v.real();
    *im = v.imag();
  });
}

smwt_status smwt_tensor_load_json(const char* path, smwt_tensor** out) {
  SMWT_REQUIRE(path && out);
  return call([&] { *out = wrap(smwt::load_tensor(path)); });
}

smwt_status smwt_tensor_save_json(const smwt_tensor* t, const char* path) {
  SMWT_REQUIRE(t && path);
  return call([&] { smwt::save_tensor(t->value, path); });
}

smwt_status smwt_add(const smwt_tensor* a, const smwt_tensor* b, smwt_tensor** out) {
  SMWT_REQUIRE(a && b && out);
  return call([&] { *out = wrap(smwt::add(a->value, b->value)); });
}

smwt_status smwt_subtract(const smwt_tensor* a, const smwt_tensor* b, smwt_tensor** out) {
  SMWT_REQUIRE(a && b && out);
  return call([&] { *out = wrap(smwt::subtract(a->value, b->value)); });
}

smwt_status smwt_scale(const smwt_tensor* a, double re, double im, smwt_tensor** out) {
  SMWT_REQUIRE(a && out);
  return call([&] { *out = wrap(smwt::scale(a->value, {re, im})); });
}

smwt_status smwt_einstein_product(const smwt_tensor* a, const smwt_tensor* b, size_t n,
                                  smwt_tensor** out) {
  SMWT_REQUIRE(a && b && out);
  return call([&] { *out = wrap(smwt::einstein_product(a->value, b->value, n)); });
}

smwt_status smwt_conj_transpose(const smwt_tensor* a, smwt_tensor** out) {
  SMWT_REQUIRE(a && out);
  return call([&] { *out = wrap(smwt::conj_transpose(a->value)); });
}

smwt_status smwt_kronecker(const smwt_tensor* a, const smwt_tensor* b, smwt_tensor** out) {
  SMWT_REQUIRE(a && b && out);
  return call([&] { *out = wrap(smwt::kronecker(a->value, b->value)); });
}

smwt_status smwt_trace(const smwt_tensor* a, double* re, double* im) {
  SMWT_REQUIRE(a && re && im);
  return call([&] {
    const smwt::Scalar v = smwt::trace(a->value);
    *re = v.real();
    *im = v.imag();
  });
}

smwt_status smwt_inner(const smwt_tensor* a, const smwt_tensor* b, double* re, double* im) {
  SMWT_REQUIRE(a && b && re && im);
  return call([&] {
    const smwt::Scalar v = smwt::inner(a->value, b->value);
    *re = v.real();
    *im = v.imag();
  });
}

smwt_status smwt_fro_norm(const smwt_tensor* a, double* out) {
  SMWT_REQUIRE(a && out);
  return call([&] { *out = smwt::fro_norm(a->value); });
}

smwt_status smwt_is_hermitian(const smwt_tensor* a, double tol, int* out) {
  SMWT_REQUIRE(a && out);
  return call([&] { *out = smwt::is_hermitian(a->value, tol) ? 1 : 0; });
}

smwt_status smwt_unfold_rank(const smwt_tensor* a, double tol, smwt_rank_info* out) {
  SMWT_REQUIRE(a && out);
  return call([&] {
    const smwt::RankInfo r = smwt::unfold_rank(a->value, tol);
    *out = smwt_rank_info{r.rank, r.full_row_rank ? 1 : 0, r.full_column_rank ? 1 : 0};
  });
}

smwt_status smwt_is_invertible(const smwt_tensor* a, double tol, int* out) {
  SMWT_REQUIRE(a && out);
  return call([&] { *out = smwt::is_invertible(a->value, tol) ? 1 : 0; });
}

smwt_status smwt_inverse(const smwt_tensor* a, smwt_tensor** out) {
  SMWT_REQUIRE(a && out);
  return call([&] { *out = wrap(smwt::inverse(a->value)); });
}

smwt_status smwt_pinv(const smwt_tensor* a, double tol, smwt_tensor** out) {
  SMWT_REQUIRE(a && out);
  return call([&] { *out = wrap(smwt::pinv(a->value, tol)); });
}

smwt_status smwt_verify_penrose(const smwt_tensor* a, const smwt_tensor* x, double tol,
                                smwt_penrose_report* out) {
  SMWT_REQUIRE(a && x && out);
  return call([&] {
    const smwt::PenroseReport r = smwt::verify_penrose(a->value, x->value, tol);
    for (std::size_t k = 0; k < 4; ++k) out->residuals[k] = r.residuals[k];
    out->passed = r.passed ? 1 : 0;
    out->tol = r.tol;
  });
}

const char* smwt_condition_label(size_t k) {
  return k < smwt::kConditionLabels.size() ? smwt::kConditionLabels[k].data() : nullptr;
}

smwt_status smwt_apply_update(const smwt_tensor* a, const smwt_tensor* u, const smwt_tensor* b,
                              const smwt_tensor* v, smwt_tensor** out) {
  SMWT_REQUIRE(a && u && b && v && out);
  return call([&] { *out = wrap(smwt::apply_update(a->value, make_update(u, b, v))); });
}

smwt_status smwt_smw_invertible(const smwt_tensor* a_inv, const smwt_tensor* u,
                                const smwt_tensor* b, const smwt_tensor* v,
                                const smwt_tensor* b_inv, smwt_tensor** out) {
  SMWT_REQUIRE(a_inv && u && b && v && out);
  return call([&] {
    const smwt::LowRankUpdate upd = make_update(u, b, v);
    *out = wrap(b_inv ? smwt::smw_invertible(a_inv->value, upd, b_inv->value)
                      : smwt::smw_invertible(a_inv->value, upd));
  });
}

smwt_status smwt_decompose_update(const smwt_tensor* a, const smwt_tensor* a_pinv,
                                  const smwt_tensor* u, const smwt_tensor* b,
                                  const smwt_tensor* v, double tol, smwt_split_parts* out) {
  SMWT_REQUIRE(a && a_pinv && u && b && v && out);
  return call([&] {
    store(smwt::decompose_update(a->value, a_pinv->value, make_update(u, b, v), tol), out);
  });
}

void smwt_split_parts_free(smwt_split_parts* parts) {
  if (!parts) return;
  for (smwt_tensor** t : {&parts->X1, &parts->Y1, &parts->X2, &parts->Y2, &parts->E1, &parts->E2}) {
    delete *t;
    *t = nullptr;
  }
}

smwt_status smwt_check_conditions(const smwt_split_parts* parts, const smwt_tensor* b,
                                  const smwt_tensor* b_pinv, double tol,
                                  smwt_condition_report* out) {
  SMWT_REQUIRE(complete(parts) && b && b_pinv && out);
  return call([&] {
    store(smwt::check_conditions(unwrap(*parts), b->value, b_pinv->value, tol), out);
  });
}

smwt_status smwt_smw_pinv(const smwt_tensor* a_pinv, const smwt_split_parts* parts,
                          const smwt_tensor* b_pinv, smwt_tensor** out) {
  SMWT_REQUIRE(a_pinv && complete(parts) && b_pinv && out);
  return call([&] { *out = wrap(smwt::smw_pinv(a_pinv->value, unwrap(*parts), b_pinv->value)); });
}

smwt_status smwt_smw_pinv_orthogonal(const smwt_tensor* a_pinv, const smwt_tensor* e1,
                                     const smwt_tensor* e2, const smwt_tensor* b_pinv,
                                     smwt_tensor** out) {
  SMWT_REQUIRE(a_pinv && e1 && e2 && b_pinv && out);
  return call([&] {
    *out = wrap(smwt::smw_pinv_orthogonal(a_pinv->value, e1->value, e2->value, b_pinv->value));
  });
}

smwt_status smwt_smw_pinv_hermitian(const smwt_tensor* a_pinv, const smwt_tensor* x,
                                    const smwt_tensor* y, const smwt_tensor* e,
                                    const smwt_tensor* b_pinv, smwt_tensor** out) {
  SMWT_REQUIRE(a_pinv && x && y && e && b_pinv && out);
  return call([&] {
    *out = wrap(
        smwt::smw_pinv_hermitian(a_pinv->value, x->value, y->value, e->value, b_pinv->value));
  });
}

smwt_status smwt_update_pinv(const smwt_tensor* a, const smwt_tensor* a_pinv,
                             const smwt_tensor* u, const smwt_tensor* b, const smwt_tensor* v,
                             double tol, smwt_tensor** s_pinv, smwt_condition_report* report,
                             smwt_split_parts* parts) {
  SMWT_REQUIRE(a && a_pinv && u && b && v && s_pinv && report);
  return call([&] {
    smwt::PinvUpdate r = smwt::update_pinv(a->value, a_pinv->value, make_update(u, b, v), tol);
    std::unique_ptr<smwt_tensor> result(wrap(std::move(r.S_pinv)));
    if (parts) store(std::move(r.parts), parts);
    store(r.report, report);
    *s_pinv = result.release();
  });
}

smwt_status smwt_solve(const smwt_tensor* a, const smwt_tensor* d, double tol, smwt_tensor** x,
                       smwt_solve_info* info) {
  SMWT_REQUIRE(a && d && x && info);
  return call([&] {
    smwt::SolveResult r = smwt::solve(a->value, d->value, tol);
    *info = smwt_solve_info{r.consistent ? 1 : 0, r.consistency_residual};
    *x = wrap(std::move(r.X));
  });
}

smwt_status smwt_norm_bound(double norm_A, double norm_A_pinv, double eps_A, double eps_D,
                            double* out) {
  SMWT_REQUIRE(out);
  return call([&] { *out = smwt::norm_bound(norm_A, norm_A_pinv, {eps_A, eps_D}); });
}

smwt_status smwt_measure_error(const smwt_tensor* a, const smwt_tensor* d, const smwt_tensor* u,
                               const smwt_tensor* b, const smwt_tensor* v,
                               const smwt_tensor* delta_d, double tol, smwt_bound_report* out) {
  SMWT_REQUIRE(a && d && u && b && v && delta_d && out);
  return call([&] {
    *out = to_c(smwt::measure_error(a->value, d->value, make_update(u, b, v), delta_d->value, tol));
  });
}

smwt_status smwt_sweep(const smwt_tensor* a, const smwt_tensor* d, const double* eps_A,
                       size_t n_eps, double eps_D, const double* alpha, size_t n_alpha,
                       smwt_bound_report* out, size_t capacity) {
  SMWT_REQUIRE(a && d && out);
  SMWT_REQUIRE(eps_A || n_eps == 0);
  SMWT_REQUIRE(alpha || n_alpha == 0);
  SMWT_REQUIRE(capacity >= n_eps * n_alpha);
  return call([&] {
    const std::vector<smwt::BoundReport> rows =
        smwt::sweep(a->value, d->value, std::vector<double>(eps_A, eps_A + n_eps), eps_D,
                    std::vector<double>(alpha, alpha + n_alpha));
    for (std::size_t k = 0; k < rows.size(); ++k) out[k] = to_c(rows[k]);
  });
}

smwt_status smwt_write_sweep_csv(const smwt_bound_report* rows, size_t n, const char* path) {
  SMWT_REQUIRE(path && (rows || n == 0));
  return call([&] {
    std::vector<smwt::BoundReport> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      smwt::BoundReport r;
      r.alpha = rows[k].alpha;
      r.norm_A = rows[k].norm_A;
      r.norm_A_pinv = rows[k].norm_A_pinv;
      r.eps_A = rows[k].eps_A;
      r.eps_D = rows[k].eps_D;
      r.bound = rows[k].bound;
      if (rows[k].has_measured_error) r.measured_error = rows[k].measured_error;
      v.push_back(r);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw smwt::IoError(std::string("cannot write ") + path);
    smwt::write_sweep_csv(out, v);
    if (!out.flush()) throw smwt::IoError(std::string("write failed for ") + path);
  });
}

}  // extern "C"
