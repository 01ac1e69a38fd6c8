/* The public header must compile as C. */
#include "ratsurf/ratsurf.h"

#include <stdio.h>

int main(void) {
  ratsurf_params* p = NULL;
  ratsurf_status s = ratsurf_params_create(3, 2, &p);
  if (s != RATSURF_OK) {
    fprintf(stderr, "%s: %s\n", ratsurf_status_name(s), ratsurf_last_error());
    return 1;
  }
  double c = 0.0;
  ratsurf_params_c_value(p, &c);
  ratsurf_params_destroy(p);
  printf("c = %.12f\n", c);
  return c > 0.99 && c < 1.01 ? 0 : 1;
}
