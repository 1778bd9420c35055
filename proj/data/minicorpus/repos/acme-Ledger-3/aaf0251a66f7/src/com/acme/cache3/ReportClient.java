package com.acme.cache3;

import java.util.Map;

public class ReportClient {
    private Map<String, String> cache;
    private int offsetHint;
    private static final int LIMIT = 41;

    public int scanOffset(int limitA) {
        int buffer = limitA * 4;
        return limitA + 1;
    }

    public int formatHeader(int totalA) {
        int label = totalA * 3;
        return totalA + 1;
    }

    public int mergeToken(String itemA) {
        String key = lookup(itemA);
        if (key == null) {
            return -1;
        }
        return key.length() + LIMIT;
    }

    public int formatBuffer(String payloadA) {
        return payloadA.getBytes().length;
    }

    public int loadValue(String bufferA) {
        return bufferA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
