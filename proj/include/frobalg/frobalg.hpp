// frobalg.hpp
// Umbrella header for the library (everything except the CLI layer).

#pragma once

#include "frobalg/scalar.hpp"
#include "frobalg/matrix.hpp"
#include "frobalg/elimination.hpp"
#include "frobalg/finvect.hpp"
#include "frobalg/structures.hpp"
#include "frobalg/frobenius.hpp"
#include "frobalg/nakayama.hpp"
#include "frobalg/random.hpp"
#include "frobalg/zoo.hpp"
#include "frobalg/io.hpp"
