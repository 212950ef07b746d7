#pragma once

#include "dtm/rational.hpp"
#include "dtm/sequence.hpp"
#include "dtm/sequence_io.hpp"
#include "dtm/extrema.hpp"
#include "dtm/transforms.hpp"
#include "dtm/transform_io.hpp"
#include "dtm/report.hpp"
#include "dtm/verify.hpp"
#include "dtm/search.hpp"
