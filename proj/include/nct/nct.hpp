#pragma once

#include "nct/scalar.hpp"
#include "nct/linalg.hpp"
#include "nct/truncation.hpp"
#include "nct/algebra.hpp"
#include "nct/representation.hpp"
#include "nct/dirac.hpp"
#include "nct/fredholm.hpp"
#include "nct/certificate.hpp"
#include "nct/connes.hpp"
#include "nct/l2.hpp"
#include "nct/podles.hpp"
#include "nct/config.hpp"
#include "nct/suites.hpp"
