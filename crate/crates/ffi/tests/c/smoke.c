#include <math.h>
#include <stdio.h>
#include <string.h>

#include "landau_bohm.h"

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                   \
    }                                                             \
  } while (0)

int main(void) {
  LbParams *p = NULL;
  EXPECT(lb_params_new(1.0, 1.0, 1.0, 1.0, &p) == LB_STATUS_OK);

  double e = 0.0;
  EXPECT(lb_energy(p, LB_MODEL_CBR, 0, 1, 0.0, &e) == LB_STATUS_OK);
  EXPECT(fabs(e - (0.5 + sqrt(5.0) / 4.0)) < 1e-14);

  EXPECT(lb_energy(p, LB_MODEL_EL, -1, 0, 0.0, &e) == LB_STATUS_INVALID_ARGUMENT);
  size_t needed = 0;
  EXPECT(lb_last_error_message(NULL, 0, &needed) == LB_STATUS_OK);
  EXPECT(needed > 1);
  char msg[256];
  EXPECT(lb_last_error_message(msg, sizeof msg, &needed) == LB_STATUS_OK);
  EXPECT(strstr(msg, "non-negative") != NULL);

  double v = 0.0;
  EXPECT(lb_theta_local_branch(1.0, 1.0, 0.5, 0.0, &v) == LB_STATUS_DOMAIN);
  EXPECT(lb_energy(NULL, LB_MODEL_QM, 0, 0, 0.0, &e) == LB_STATUS_NULL_POINTER);

  printf("landau-bohm %s: c smoke ok\n", lb_version());
  lb_params_free(p);
  return 0;
}
