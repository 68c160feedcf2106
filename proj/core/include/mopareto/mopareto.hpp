#ifndef MOPARETO_MOPARETO_HPP
#define MOPARETO_MOPARETO_HPP

#include "mopareto/constructors.hpp"
#include "mopareto/dominance.hpp"
#include "mopareto/domsets.hpp"
#include "mopareto/errors.hpp"
#include "mopareto/generators.hpp"
#include "mopareto/grid.hpp"
#include "mopareto/io.hpp"
#include "mopareto/model.hpp"
#include "mopareto/oracles.hpp"
#include "mopareto/rational.hpp"

#endif  // MOPARETO_MOPARETO_HPP
