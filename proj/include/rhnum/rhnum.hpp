#pragma once

#include "rhnum/classify.hpp"
#include "rhnum/errors.hpp"
#include "rhnum/families.hpp"
#include "rhnum/numtheory.hpp"
#include "rhnum/pattern.hpp"
#include "rhnum/radix.hpp"
#include "rhnum/verify.hpp"
