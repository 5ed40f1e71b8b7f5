#include <stdio.h>
#include <string.h>

#include "admpoisson.h"

static const char *LIE2 =
    "field rational\n"
    "dim 2\n"
    "op star\n"
    "star: e1 e2 = 1 e2\n"
    "star: e2 e1 = -1 e2\n";

int main(void) {
    AdmFile *file = NULL;
    if (adm_file_parse(LIE2, &file) != ADM_STATUS_OK) {
        return 10;
    }
    char *report = NULL;
    if (adm_check(file, "adm-poisson", &report) != ADM_STATUS_OK) {
        return 11;
    }
    printf("%s\n", report);
    adm_string_free(report);

    AdmFile *pol = NULL;
    if (adm_build(file, "polarize", &pol) != ADM_STATUS_OK) {
        return 12;
    }
    if (adm_check(pol, "poisson", NULL) != ADM_STATUS_OK) {
        return 13;
    }

    AdmFile *bad = NULL;
    if (adm_file_parse("field gf 3\ndim 1\n", &bad) != ADM_STATUS_PARSE_ERROR || bad != NULL) {
        return 14;
    }
    char msg[256];
    size_t len = adm_last_error(msg, sizeof msg);
    if (len == 0 || strstr(msg, "characteristic") == NULL) {
        return 15;
    }
    printf("%s\n", msg);

    adm_file_free(pol);
    adm_file_free(file);
    return 0;
}
