#pragma once

#include "qfejer/degree.hpp"
#include "qfejer/element.hpp"
#include "qfejer/errors.hpp"
#include "qfejer/fejer.hpp"
#include "qfejer/folner.hpp"
#include "qfejer/gauge.hpp"
#include "qfejer/json_io.hpp"
#include "qfejer/monomial.hpp"
#include "qfejer/parser.hpp"
#include "qfejer/psd.hpp"
#include "qfejer/scalar.hpp"
#include "qfejer/system.hpp"
#include "qfejer/thompson.hpp"
