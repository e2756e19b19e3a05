#ifndef DELJOIN_DELJOIN_HPP
#define DELJOIN_DELJOIN_HPP

#include "common.hpp"
#include "complex.hpp"
#include "deleted.hpp"
#include "gf2.hpp"
#include "homology.hpp"
#include "index.hpp"
#include "io.hpp"
#include "obstruction.hpp"
#include "suite.hpp"
#include "z2complex.hpp"

#endif  // DELJOIN_DELJOIN_HPP
