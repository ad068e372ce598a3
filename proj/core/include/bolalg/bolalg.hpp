#pragma once

#include "bolalg/algebra.hpp"
#include "bolalg/category.hpp"
#include "bolalg/duality.hpp"
#include "bolalg/envelope.hpp"
#include "bolalg/error.hpp"
#include "bolalg/identity.hpp"
#include "bolalg/ideals.hpp"
#include "bolalg/io.hpp"
#include "bolalg/linalg.hpp"
#include "bolalg/module.hpp"
#include "bolalg/pder.hpp"
#include "bolalg/rational.hpp"
#include "bolalg/report.hpp"
