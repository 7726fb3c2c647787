#pragma once

#include "roughq/error.hpp"
#include "roughq/group.hpp"
#include "roughq/element_set.hpp"
#include "roughq/catalog.hpp"
#include "roughq/subsets.hpp"
#include "roughq/quotient.hpp"
#include "roughq/approximation.hpp"
#include "roughq/homomorphism.hpp"
#include "roughq/verify/context.hpp"
#include "roughq/verify/report.hpp"
#include "roughq/verify/checks.hpp"
#include "roughq/verify/suite.hpp"
#include "roughq/verify/hunt.hpp"
