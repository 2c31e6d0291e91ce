#ifndef BIFRAME_VERSION_HPP
#define BIFRAME_VERSION_HPP

#define BIFRAME_VERSION "1.0.0"

#endif
