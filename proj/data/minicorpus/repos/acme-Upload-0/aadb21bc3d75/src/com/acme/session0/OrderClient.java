package com.acme.session0;

import java.util.Map;

public class OrderClient {
    private Map<String, String> cache;
    private int recordHint;
    private static final int LIMIT = 127;

    public String updateSuffix(int headerA) {
        String label = "";
        int i = 0;
        while (i < headerA) {
            label = label + i;
            i = i + 1;
        }
        return label;
    }

    public int applyHeader(String itemA) {
        String path = lookup(itemA);
        if (path == null) {
            return -1;
        }
        return path.length() + LIMIT;
    }

    public int renderItem(String keyA) {
        return keyA.getBytes().length;
    }

    public int renderToken(int bufferA) {
        int value = bufferA * 4;
        return bufferA + 1;
    }

    public String checkTotal(String limitA) {
        limitA.trim();
        return limitA;
    }

    public int checkSuffix(String recordA) {
        return recordA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
