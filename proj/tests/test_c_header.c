// Copyright 2026 The certlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Compiled as C99: the public header must not depend on C++. */
#include <math.h>
#include <stdio.h>

#include "certlab/certlab.h"

int main(void) {
    certlab_set* set = NULL;
    certlab_bounds b;
    double lo = 0.0, hi = 0.0;
    if (certlab_set_builtin("mub", 2, &set) != CERTLAB_OK) {
        fprintf(stderr, "builtin failed: %s\n", certlab_last_error());
        return 1;
    }
    if (certlab_bounds_compute(set, &b) != CERTLAB_OK) return 1;
    certlab_set_free(set);
    if (certlab_sanchez_ruiz(2, &lo, &hi) != CERTLAB_OK) return 1;
    if (fabs(b.b_min - lo) > 1e-12) {
        fprintf(stderr, "b_min %.15g differs from %.15g\n", b.b_min, lo);
        return 1;
    }
    printf("certlab %s: b_min = %.12f\n", certlab_version(), b.b_min);
    return 0;
}
