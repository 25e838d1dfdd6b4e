#pragma once

#include "tuhyper/detect.hpp"
#include "tuhyper/error.hpp"
#include "tuhyper/extract.hpp"
#include "tuhyper/fixtures.hpp"
#include "tuhyper/gen.hpp"
#include "tuhyper/hypergraph.hpp"
#include "tuhyper/io.hpp"
#include "tuhyper/linalg.hpp"
#include "tuhyper/matrix.hpp"
#include "tuhyper/mixed.hpp"
#include "tuhyper/quasi.hpp"
#include "tuhyper/search.hpp"
#include "tuhyper/witness.hpp"
