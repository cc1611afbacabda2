#ifndef CHENLORENZ_CHENLORENZ_HPP
#define CHENLORENZ_CHENLORENZ_HPP

#include "chenlorenz/dynamics.hpp"
#include "chenlorenz/equiv.hpp"
#include "chenlorenz/matrix.hpp"
#include "chenlorenz/multipoly.hpp"
#include "chenlorenz/quadext.hpp"
#include "chenlorenz/rational.hpp"
#include "chenlorenz/resultant.hpp"
#include "chenlorenz/roots.hpp"
#include "chenlorenz/systems.hpp"
#include "chenlorenz/unipoly.hpp"

#endif // CHENLORENZ_CHENLORENZ_HPP
