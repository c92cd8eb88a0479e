#pragma once

#include "dskit/balanced.hpp"
#include "dskit/complex.hpp"
#include "dskit/enumeration.hpp"
#include "dskit/error.hpp"
#include "dskit/face.hpp"
#include "dskit/generators.hpp"
#include "dskit/homology.hpp"
#include "dskit/integer.hpp"
#include "dskit/io.hpp"
#include "dskit/macdonald.hpp"
#include "dskit/poly.hpp"
#include "dskit/relations.hpp"
#include "dskit/report.hpp"
#include "dskit/stanley_reisner.hpp"
#include "dskit/verify.hpp"
