#include <math.h>
#include <stdio.h>
#include <string.h>

#include "media_accountability.h"

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, \
              #cond);                                                  \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  MaParams *p = NULL;
  CHECK(ma_params_new(0.05, 0.5, 0.7, 0.1, 1.0, 0.4, 0.3, &p) == MA_STATUS_OK);

  MaThresholds t;
  CHECK(ma_thresholds(p, &t) == MA_STATUS_OK);
  CHECK(fabs(t.phi_v - 1.4 / 19.0 / 0.11) < 1e-12);

  MaRegime regime;
  MaProfile profile;
  CHECK(ma_classify(p, &regime, &profile) == MA_STATUS_OK);
  CHECK(regime == MA_REGIME_ACCOUNTABILITY_LISTEN_BOTH);
  CHECK(strcmp(ma_regime_name(regime), "AccountabilityListenBoth") == 0);
  CHECK(ma_profile_index(profile) == 17);

  MaVerifyResult v;
  CHECK(ma_is_pbe(p, profile, &v) == MA_STATUS_OK);
  CHECK(v.is_equilibrium);

  MaMetrics m;
  CHECK(ma_theoretical_metrics(p, profile, &m) == MA_STATUS_OK);
  CHECK(fabs(m.p_high_retained - 0.49) < 1e-12);

  MaSweep *sweep = NULL;
  CHECK(ma_sweep_new(p, MA_FIELD_PHI, 0.0, 1.0, 1001, &sweep) == MA_STATUS_OK);
  CHECK(ma_sweep_len(sweep) == 1001);
  CHECK(ma_sweep_transition_count(sweep) == 2);
  ma_sweep_free(sweep);

  MaParams *bad = NULL;
  CHECK(ma_params_new(0.05, 0.5, 0.4, 0.1, 1.0, 0.4, 0.3, &bad) ==
        MA_STATUS_OUT_OF_RANGE);
  CHECK(bad == NULL);
  char msg[256];
  CHECK(ma_last_error_message(msg, sizeof msg) > 1);
  CHECK(strstr(msg, "q") != NULL);

  ma_params_free(p);
  puts("ok");
  return 0;
}
