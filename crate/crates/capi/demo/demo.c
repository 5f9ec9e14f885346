/* Minimal consumer of the eqgb C API: parse a problem, compute the basis,
 * print the JSON document. Build (from the repository root):
 *
 *   cargo build -p eqgb-capi
 *   cc crates/capi/demo/demo.c -Icrates/capi/include \
 *      target/debug/libeqgb_capi.a -lpthread -ldl -lm -o eqgb-demo
 */
#include <stdio.h>
#include <string.h>

#include "eqgb.h"

int main(void) {
    const char *problem =
        "{ \"ring\": [ {\"name\": \"y\", \"free\": 2, \"constraint\": \"strictly-decreasing\"},"
        "              {\"name\": \"x\", \"free\": 1} ],"
        "  \"order\": \"elim-onefactor\","
        "  \"generators\": [[ {\"coeff\": \"1\", \"factors\": [{\"symbol\": \"y\", \"free\": [2,1]}]},"
        "                     {\"coeff\": \"-1\", \"factors\": [{\"symbol\": \"x\", \"free\": [2]},"
        "                                                      {\"symbol\": \"x\", \"free\": [1]}]} ]] }";

    EqgbProblem *handle = NULL;
    if (eqgb_problem_parse(problem, &handle) != EQGB_STATUS_OK) {
        fprintf(stderr, "parse failed: %s\n", eqgb_last_error());
        return 1;
    }

    char *doc = NULL;
    EqgbStatus status = eqgb_gb(handle, &doc);
    if (status != EQGB_STATUS_OK) {
        fprintf(stderr, "gb failed (%d): %s\n", (int)status, eqgb_last_error());
        eqgb_problem_free(handle);
        return 1;
    }
    if (strstr(doc, "\"status\": \"complete\"") == NULL) {
        fprintf(stderr, "unexpected document\n");
        return 1;
    }
    printf("%s", doc);

    eqgb_string_free(doc);
    eqgb_problem_free(handle);
    return 0;
}
