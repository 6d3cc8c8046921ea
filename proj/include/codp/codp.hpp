#pragma once

#include "algebra.hpp"
#include "builtins.hpp"
#include "calculus.hpp"
#include "complex.hpp"
#include "functor.hpp"
#include "hom.hpp"
#include "io.hpp"
#include "iso.hpp"
#include "koszul.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "minimize.hpp"
#include "quadric.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "serre.hpp"
#include "smith.hpp"
#include "tables.hpp"
