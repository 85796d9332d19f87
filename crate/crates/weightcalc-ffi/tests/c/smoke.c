#include <math.h>
#include <stdio.h>
#include <string.h>

#include "weightcalc.h"

#define CHECK(cond)                                                 \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                     \
    }                                                               \
  } while (0)

int main(void) {
  WcSequence *q = NULL;
  CHECK(wc_sequence_qgevrey(2.0, 256, &q) == WC_STATUS_OK);
  CHECK(wc_sequence_truncation(q) == 256);

  size_t g = 0;
  CHECK(wc_sequence_growth_index(q, 16, &g) == WC_STATUS_OK);
  CHECK(g == 2);

  int mg = -1;
  CHECK(wc_sequence_has_mg(q, &mg) == WC_STATUS_OK);
  CHECK(mg == 0);

  WcOmega *w = NULL;
  CHECK(wc_omega_of(q, &w) == WC_STATUS_OK);
  double v = -1.0;
  CHECK(wc_omega_eval(w, 0.5, &v) == WC_STATUS_OK);
  CHECK(v == 0.0);
  CHECK(wc_omega_eval(w, 2.0 * wc_omega_t_max(w), &v) == WC_STATUS_DOMAIN);
  char msg[256];
  CHECK(wc_last_error_message(msg, sizeof msg) > 0);
  CHECK(strstr(msg, "domain") != NULL);

  char *json = NULL;
  int status = -1;
  CHECK(wc_verify_all(q, 1, &json, &status) == WC_STATUS_OK);
  CHECK(status != 2);
  CHECK(json != NULL && json[0] == '[');
  wc_string_free(json);

  WcSequence *bad = NULL;
  CHECK(wc_sequence_from_spec("nope:1", 8, &bad) == WC_STATUS_PARSE);
  CHECK(bad == NULL);

  wc_omega_free(w);
  wc_sequence_free(q);
  printf("ok %s\n", wc_version());
  return 0;
}
