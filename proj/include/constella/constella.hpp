#ifndef CONSTELLA_CONSTELLA_HPP
#define CONSTELLA_CONSTELLA_HPP

#include "report.hpp"
#include "table.hpp"
#include "config.hpp"
#include "semigroupoid.hpp"
#include "constellation.hpp"
#include "functor.hpp"
#include "morphism.hpp"
#include "szendrei.hpp"
#include "classify.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "fixtures.hpp"

#endif  // CONSTELLA_CONSTELLA_HPP
