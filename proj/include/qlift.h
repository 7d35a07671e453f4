#ifndef QLIFT_H
#define QLIFT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define QLIFT_API __attribute__((visibility("default")))
#else
#define QLIFT_API
#endif

typedef enum {
  QLIFT_OK = 0,
  QLIFT_INVALID_ARGUMENT = 1,
  QLIFT_OUT_OF_RANGE = 2,
  QLIFT_POLE = 3,
  QLIFT_UNDEFINED_ANGLE = 4,
  QLIFT_INTEGRATION = 5,
  QLIFT_VALIDITY = 6,
  QLIFT_ADIABATICITY = 7,
  QLIFT_AREA_TOO_SMALL = 8,
  QLIFT_CONFIG = 9,
  QLIFT_IO = 10,
  QLIFT_NUMERIC = 11,
  QLIFT_INTERNAL = 99
} qlift_status;

typedef enum { QLIFT_FORMAT_CSV = 0, QLIFT_FORMAT_JSON = 1 } qlift_format;

typedef enum { QLIFT_STARK_PUMP = 0, QLIFT_PUMP_STARK = 1 } qlift_sequence;

typedef struct qlift_shape qlift_shape;
typedef struct qlift_report qlift_report;

typedef struct {
  double re, im;
} qlift_complex;

/* SU(2) operator [[u11, u12], [-conj(u12), conj(u11)]]. */
typedef struct {
  qlift_complex u11, u12;
} qlift_su2;

typedef struct {
  double p_minus, p_plus;
  double chi_minus, chi_plus;
  double common_phase;
  int regime_warning;
} qlift_lifting;

typedef struct {
  double t0_delta0;
  qlift_complex b_minus, b_plus;
  double p_transfer;
  int regime_warning;
} qlift_lineshape_point;

typedef struct {
  double p_plus_final;
  double relative_phase;
  int robust_phase;
  int numeric;
} qlift_half_scrap_result;

typedef struct {
  double tol;
  int workers;
} qlift_options;

/* Strings are owned by the report and live until qlift_report_destroy. */
typedef struct {
  int id;
  const char* name;
  int passed;
  double measured;
  double threshold;
  double seconds;
  const char* detail;
} qlift_criterion;

QLIFT_API const char* qlift_version(void);
QLIFT_API const char* qlift_status_name(qlift_status status);
/* Message of the last failed call on this thread; "" after a success. */
QLIFT_API const char* qlift_last_error(void);

QLIFT_API void qlift_options_default(qlift_options* out);

/* kind: power_rise, power_fall, exponential, gaussian, sech, trig_power,
   linear_truncated. */
QLIFT_API qlift_status qlift_shape_create(const char* kind, int n, int sign, double t0_omega0,
                                          double tau_start, double tau_end, qlift_shape** out);
QLIFT_API void qlift_shape_destroy(qlift_shape* shape);
QLIFT_API qlift_status qlift_shape_rabi(const qlift_shape* shape, double tau, double* out);

/* Bare-basis U(tau_b, tau_a). */
QLIFT_API qlift_status qlift_propagate(const qlift_shape* shape, double t0_delta0, double tau_a,
                                       double tau_b, double tol, qlift_su2* out);

QLIFT_API qlift_status qlift_linear_lifting(double omega, qlift_lifting* out);
QLIFT_API qlift_status qlift_universal_lifting(int n, double t0_delta0, double t0_omega0,
                                               qlift_lifting* out);
QLIFT_API qlift_status qlift_exponential_lifting(double varpi, double zeta, double s_i,
                                                 qlift_lifting* out);

QLIFT_API qlift_status qlift_rosen_zener(double t0_omega0, double t0_delta0,
                                         qlift_lineshape_point* out);
QLIFT_API qlift_status qlift_trig_lineshape(int n, double t0_omega0, double t0_delta0,
                                            qlift_lineshape_point* out);
/* Lift, adiabatic plateau and create, with default junctions. */
QLIFT_API qlift_status qlift_composed_transfer(const qlift_shape* shape, double t0_delta0,
                                               qlift_lineshape_point* out);

QLIFT_API qlift_status qlift_half_scrap(qlift_sequence sequence, const qlift_shape* pump,
                                        double t0_omega0, double t0_delta0,
                                        qlift_half_scrap_result* out);

/* options may be NULL for the defaults. */
QLIFT_API qlift_status qlift_run_scenario_file(const char* path, const qlift_options* options,
                                               qlift_report** out);
QLIFT_API qlift_status qlift_run_scenario_text(const char* yaml, const qlift_options* options,
                                               qlift_report** out);
/* Runs a scenario file with its sweep replaced by (parameter, from, to, points). */
QLIFT_API qlift_status qlift_run_sweep_file(const char* path, const char* parameter, double from,
                                            double to, int points, const qlift_options* options,
                                            qlift_report** out);

QLIFT_API size_t qlift_figure_count(void);
/* NULL when i is out of range. */
QLIFT_API const char* qlift_figure_id(size_t i);
QLIFT_API qlift_status qlift_figure(const char* id, const qlift_options* options, qlift_report** out);

/* ids == NULL or count == 0 runs all ten criteria. */
QLIFT_API qlift_status qlift_validate(const int* ids, size_t count, int workers, qlift_report** out);

QLIFT_API size_t qlift_report_table_count(const qlift_report* report);
QLIFT_API const char* qlift_report_table_name(const qlift_report* report, size_t i);
/* Free the returned string with qlift_string_free. */
QLIFT_API qlift_status qlift_report_to_string(const qlift_report* report, size_t table,
                                              qlift_format format, char** out);
/* Writes one file per table into out_dir (created if missing). */
QLIFT_API qlift_status qlift_report_write(const qlift_report* report, const char* out_dir,
                                          qlift_format format);
/* Scenarios whose thresholds were breached, or failed criteria. */
QLIFT_API int qlift_report_breached(const qlift_report* report);
QLIFT_API int qlift_report_failed_rows(const qlift_report* report);
QLIFT_API size_t qlift_report_criterion_count(const qlift_report* report);
QLIFT_API qlift_status qlift_report_criterion(const qlift_report* report, size_t i,
                                              qlift_criterion* out);
QLIFT_API void qlift_report_destroy(qlift_report* report);
QLIFT_API void qlift_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
