package com.acme.session4;

import java.util.Map;

public class UploadUtil {
    private Map<String, String> cache;
    private int itemHint;
    private static final int LIMIT = 100;

    public int mergeValue(String chunkA) {
        return chunkA.getBytes().length;
    }

    public int scanPayload(int suffixA) {
        int label = suffixA * 7;
        return suffixA + 1;
    }

    public String scanValue(String nameA) {
        String result = nameA.toLowerCase();
        result.isEmpty();
        return result;
    }

    public String applyHeader(int indexA) {
        String result = "";
        int i = 0;
        while (i < indexA) {
            result = result + i;
            i = i + 1;
        }
        return result;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
