#pragma once

#include "umbral/config.hpp"
#include "umbral/errors.hpp"
#include "umbral/fresnel.hpp"
#include "umbral/gauss_trig.hpp"
#include "umbral/levy.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/quasi_gauss.hpp"
#include "umbral/result.hpp"
#include "umbral/special.hpp"
#include "umbral/weights.hpp"
