#include <stdio.h>
#include <string.h>

#include "arcdiag.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    ArcPresentation *p = NULL;
    CHECK(arcdiag_presentation_new("jacobson-dg", "q", &p) == ARC_STATUS_OK);

    ArcMorphism *y = NULL, *x = NULL, *yx = NULL;
    CHECK(arcdiag_eval(p, "y", &y) == ARC_STATUS_OK);
    CHECK(arcdiag_eval(p, "x", &x) == ARC_STATUS_OK);
    CHECK(arcdiag_compose(y, x, &yx) == ARC_STATUS_OK);

    char *text = NULL;
    CHECK(arcdiag_morphism_print(yx, &text) == ARC_STATUS_OK);
    CHECK(strcmp(text, "1_X") == 0);
    arcdiag_string_free(text);

    ArcMorphism *bad = NULL;
    CHECK(arcdiag_eval(p, "z.x", &bad) == ARC_STATUS_ARITY_MISMATCH);
    CHECK(arcdiag_last_error() != NULL);

    char *k0 = NULL;
    CHECK(arcdiag_k0_class(p, 2, &k0) == ARC_STATUS_OK);
    CHECK(strcmp(k0, "1/4") == 0);
    arcdiag_string_free(k0);

    CHECK(arcdiag_count_partial_bijections(2, 2) == 6);

    arcdiag_morphism_free(yx);
    arcdiag_morphism_free(x);
    arcdiag_morphism_free(y);
    arcdiag_presentation_free(p);
    puts("ok");
    return 0;
}
