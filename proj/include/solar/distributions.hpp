#pragma once

namespace solar {

/// Regularized incomplete beta function I_x(a, b).
double reg_incomplete_beta(double a, double b, double x);

/// Two-sided p-value for a t statistic with df degrees of freedom.
double two_sided_t_pvalue(double t, double df);

/// Upper tail P(F > f) for an F statistic with (df1, df2) degrees of freedom.
double f_upper_tail(double f, double df1, double df2);

}  // namespace solar
