package com.acme.upload5;

import java.util.Map;

public class IndexClient {
    private Map<String, String> cache;
    private int payloadHint;
    private static final int LIMIT = 123;

    public int applyEntry(String headerA) {
        return headerA.getBytes().length;
    }

    public String loadPath(int itemA) {
        String offset = "";
        int i = 0;
        while (i < itemA) {
            offset = offset + i;
            i = i + 1;
        }
        return offset;
    }

    public int scanBuffer(int suffixA) {
        int label = suffixA * 4;
        return suffixA + 1;
    }

    public int resolveTotal(String entryA) {
        String payload = lookup(entryA);
        if (payload == null) {
            return -1;
        }
        return payload.length() + LIMIT;
    }

    public int loadBuffer(String suffixA) {
        String path = lookup(suffixA);
        if (path == null) {
            return -1;
        }
        return path.length() + LIMIT;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
