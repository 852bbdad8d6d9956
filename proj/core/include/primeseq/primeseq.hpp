#pragma once

#include "primeseq/analytics.hpp"
#include "primeseq/bigint.hpp"
#include "primeseq/conjectures.hpp"
#include "primeseq/contfrac.hpp"
#include "primeseq/families.hpp"
#include "primeseq/primality.hpp"
#include "primeseq/recurrences.hpp"
