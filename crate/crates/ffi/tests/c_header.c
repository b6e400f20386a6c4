#include <stdio.h>
#include <string.h>
#include "rgamma.h"

int main(void) {
    uint32_t gens[] = {4, 6, 13};
    RgAnalysis *a = NULL;
    if (rg_analysis_new(gens, 3, &a) != RG_STATUS_OK) return 10;

    uint32_t c = 0;
    size_t m = 0, d = 0, n = 0;
    bool has = false, in = true;
    rg_analysis_conductor(a, &c);
    rg_analysis_ambient_dim(a, &m);
    rg_analysis_affine_dim(a, &d, &has);
    rg_analysis_equation_count(a, &n);
    if (c != 16 || m != 10 || !has || d != 9 || n != 1) return 11;

    char *eq = NULL;
    if (rg_analysis_equation(a, 0, &eq) != RG_STATUS_OK) return 12;
    printf("%s\n", eq);
    rg_string_free(eq);

    if (rg_analysis_check_point(a, "b7=1", true, &in) != RG_STATUS_OK || in) return 13;
    if (rg_analysis_check_point(a, "zz=1", false, &in) != RG_STATUS_INVALID_INPUT) return 14;
    if (strlen(rg_last_error_message()) == 0) return 15;

    rg_analysis_free(a);
    uint32_t bad[] = {4, 6};
    if (rg_analysis_new(bad, 2, &a) != RG_STATUS_DOMAIN_ERROR) return 16;
    return 0;
}
