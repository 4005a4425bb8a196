#include <stdio.h>
#include <string.h>

#include "hesscsp.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__,     \
              __LINE__, #cond);                                  \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  hcsp_rh *rh = NULL;
  CHECK(hcsp_rh_parse("0,0,1", &rh) == HCSP_STATUS_OK);
  CHECK(hcsp_rh_len(rh) == 3);
  CHECK(hcsp_rh_edge_count(rh) == 2);

  int64_t d = 0;
  CHECK(hcsp_dimension(rh, 3, &d) == HCSP_STATUS_OK && d == 4);

  hcsp_csp *csp = NULL;
  CHECK(hcsp_csp_compute(rh, 3, false, &csp) == HCSP_STATUS_OK);
  CHECK(hcsp_csp_verified(csp));
  char *json = NULL;
  CHECK(hcsp_csp_to_json(csp, &json) == HCSP_STATUS_OK);
  CHECK(strstr(json, "\"E_r\":2") != NULL);
  hcsp_string_free(json);
  hcsp_csp_free(csp);

  bool agree = false;
  CHECK(hcsp_poincare_check(rh, 3, &agree) == HCSP_STATUS_OK && agree);
  hcsp_rh_free(rh);

  hcsp_rh *bad = NULL;
  CHECK(hcsp_rh_parse("0,2,1", &bad) == HCSP_STATUS_NOT_WEAKLY_INCREASING);
  CHECK(bad == NULL);
  CHECK(hcsp_last_error() != NULL);

  puts("ok");
  return 0;
}
