#pragma once

#include "downstream/algorithm.hpp"
#include "downstream/assign.hpp"
#include "downstream/bench.hpp"
#include "downstream/bits.hpp"
#include "downstream/compressing_buffer.hpp"
#include "downstream/errors.hpp"
#include "downstream/explode.hpp"
#include "downstream/greedy.hpp"
#include "downstream/hex.hpp"
#include "downstream/lookup.hpp"
#include "downstream/oracle.hpp"
#include "downstream/steady.hpp"
#include "downstream/surface.hpp"
